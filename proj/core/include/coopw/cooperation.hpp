// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "coopw/errors.hpp"

namespace coopw {

struct Decibel {
  double db = 0.0;
};

// 10^(db/10).
[[nodiscard]] double db_to_linear(Decibel d);

// 10 * log10(x). Throws DomainError for x <= 0.
[[nodiscard]] Decibel linear_to_db(double x);

// Operating point of a two-user uplink, all SNRs linear.
//   theta:       decoding threshold of the direct (non-cooperative) mode
//   theta_prime: decoding threshold of the cooperative mode, >= theta
//   gamma_bar:   mean uplink SNR under Rayleigh fading
struct LinkBudget {
  double theta = 0.0;
  double theta_prime = 0.0;
  double gamma_bar = 0.0;
};

[[nodiscard]] LinkBudget budget_from_db(double theta_db, double theta_prime_db, double gamma_db);

enum class Verdict { CertainlyBeneficial, CertainlyHarmful, ExactBeneficial, ExactHarmful };

[[nodiscard]] const char* to_string(Verdict v);

struct CooperationAssessment {
  Verdict verdict = Verdict::ExactHarmful;
  double exact_threshold = 0.0;
  double safe_threshold = 0.0;
  // Unset when theta/gamma_bar >= 1: the avoid bound is only certified on (0, 1).
  std::optional<double> avoid_threshold;
  double p_nc = 0.0;
  double p_c = 0.0;
  // True when theta/gamma_bar is in (0, 1) and all three thresholds are certified.
  bool bounded_regime = true;
};

// Outage probability of direct transmission: 1 - e^{-theta/gamma_bar}.
[[nodiscard]] double outage_noncoop(double theta, double gamma_bar);

// Outage probability of decode-and-forward with an ideal inter-user channel and
// maximum ratio combining, half the power per hop:
//   1 - (1 + theta'/(gamma_bar/2)) e^{-theta'/(gamma_bar/2)}.
[[nodiscard]] double outage_coop(double theta_prime, double gamma_bar);

// Largest cooperative threshold that still beats direct transmission:
//   -(gamma_bar/2) * (W_{-1}(-e^{-1-theta/gamma_bar}) + 1).
// Cooperation is beneficial iff theta_prime < exact_threshold.
[[nodiscard]] double exact_threshold(double theta, double gamma_bar);

// sqrt(gamma_bar*theta/2) + theta/3: theta_prime <= this certifies benefit.
// Satisfiable with theta_prime >= theta iff theta <= (9/8) gamma_bar.
[[nodiscard]] double safe_threshold(double theta, double gamma_bar);

// sqrt(gamma_bar*theta/2) + 3*theta/8: theta_prime >= this certifies harm.
// Certified only for theta/gamma_bar < 1; throws DomainError otherwise.
[[nodiscard]] double avoid_threshold(double theta, double gamma_bar);

// Smallest mean SNR at which cooperation can still help:
//   2 * (theta_prime/sqrt(theta) - sqrt(theta)/3)^2.
// Requires theta > 0 and theta_prime >= theta.
[[nodiscard]] double min_gamma(double theta, double theta_prime);

// Classify the budget. The certain verdicts come from the closed-form envelopes,
// the exact ones from the W-based threshold (theta_prime < exact => beneficial;
// equality counts as harmful). For theta >= gamma_bar the avoid envelope is not
// certified: avoid_threshold stays unset, bounded_regime goes false, and the
// verdict degrades to the exact comparison.
[[nodiscard]] CooperationAssessment assess(const LinkBudget& budget);

}  // namespace coopw
