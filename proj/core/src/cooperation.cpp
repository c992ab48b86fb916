// SPDX-License-Identifier: Apache-2.0
//
// Decode-and-forward decision layer. Everything here is a closed form on top
// of lambert_w; expm1 keeps the small-outage regime accurate and the verdict
// ladder prefers the certified envelopes before falling back to the exact
// W-based threshold.

#include "coopw/cooperation.hpp"

#include <cmath>

#include "coopw/lambert.hpp"

namespace coopw {
namespace {

void require_snr_pair(double threshold, double gamma_bar, const char* who) {
  if (std::isnan(threshold) || threshold < 0.0 || !(gamma_bar > 0.0)) {
    throw DomainError(std::string(who) + ": requires threshold >= 0 and gamma_bar > 0");
  }
}

void require_positive_theta(double theta, double gamma_bar, const char* who) {
  if (!(theta > 0.0) || !(gamma_bar > 0.0)) {
    throw DomainError(std::string(who) + ": requires theta > 0 and gamma_bar > 0");
  }
}

}  // namespace

double db_to_linear(Decibel d) {
  if (std::isnan(d.db)) throw DomainError("db_to_linear: NaN");
  return std::pow(10.0, d.db / 10.0);
}

Decibel linear_to_db(double x) {
  if (!(x > 0.0)) throw DomainError("linear_to_db: requires x > 0");
  return Decibel{10.0 * std::log10(x)};
}

LinkBudget budget_from_db(double theta_db, double theta_prime_db, double gamma_db) {
  LinkBudget b;
  b.theta = db_to_linear(Decibel{theta_db});
  b.theta_prime = db_to_linear(Decibel{theta_prime_db});
  b.gamma_bar = db_to_linear(Decibel{gamma_db});
  return b;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertainlyBeneficial: return "certainly-beneficial";
    case Verdict::CertainlyHarmful: return "certainly-harmful";
    case Verdict::ExactBeneficial: return "beneficial";
    case Verdict::ExactHarmful: return "harmful";
  }
  throw DomainError("to_string(Verdict): invalid value");
}

double outage_noncoop(double theta, double gamma_bar) {
  require_snr_pair(theta, gamma_bar, "outage_noncoop");
  return -std::expm1(-theta / gamma_bar);
}

double outage_coop(double theta_prime, double gamma_bar) {
  require_snr_pair(theta_prime, gamma_bar, "outage_coop");
  const double v = theta_prime / (0.5 * gamma_bar);
  // 1 - (1+v) e^{-v} = -expm1(-v) - v e^{-v}; clamp round-off at v ~ 0.
  const double p = -std::expm1(-v) - v * std::exp(-v);
  return p < 0.0 ? 0.0 : p;
}

double exact_threshold(double theta, double gamma_bar) {
  require_positive_theta(theta, gamma_bar, "exact_threshold");
  const double z = -std::exp(-1.0 - theta / gamma_bar);
  const double w = lambert_w(z, Branch::MinusOne).value;
  return -0.5 * gamma_bar * (w + 1.0);
}

double safe_threshold(double theta, double gamma_bar) {
  require_positive_theta(theta, gamma_bar, "safe_threshold");
  return std::sqrt(0.5 * gamma_bar * theta) + theta / 3.0;
}

double avoid_threshold(double theta, double gamma_bar) {
  require_positive_theta(theta, gamma_bar, "avoid_threshold");
  if (!(theta / gamma_bar < 1.0)) {
    throw DomainError("avoid_threshold: certified only for theta < gamma_bar");
  }
  return std::sqrt(0.5 * gamma_bar * theta) + 0.375 * theta;
}

double min_gamma(double theta, double theta_prime) {
  if (!(theta > 0.0) || std::isnan(theta_prime) || theta_prime < theta) {
    throw DomainError("min_gamma: requires theta > 0 and theta_prime >= theta");
  }
  const double root = std::sqrt(theta);
  const double margin = theta_prime / root - root / 3.0;
  return 2.0 * margin * margin;
}

CooperationAssessment assess(const LinkBudget& budget) {
  if (!(budget.theta > 0.0) || std::isnan(budget.theta_prime) ||
      budget.theta_prime < budget.theta || !(budget.gamma_bar > 0.0)) {
    throw DomainError("assess: requires 0 < theta <= theta_prime and gamma_bar > 0");
  }
  CooperationAssessment a;
  a.exact_threshold = exact_threshold(budget.theta, budget.gamma_bar);
  a.safe_threshold = safe_threshold(budget.theta, budget.gamma_bar);
  a.bounded_regime = budget.theta / budget.gamma_bar < 1.0;
  if (a.bounded_regime) a.avoid_threshold = avoid_threshold(budget.theta, budget.gamma_bar);
  a.p_nc = outage_noncoop(budget.theta, budget.gamma_bar);
  a.p_c = outage_coop(budget.theta_prime, budget.gamma_bar);

  if (budget.theta_prime <= a.safe_threshold) {
    a.verdict = Verdict::CertainlyBeneficial;
  } else if (a.avoid_threshold && budget.theta_prime >= *a.avoid_threshold) {
    a.verdict = Verdict::CertainlyHarmful;
  } else {
    a.verdict = budget.theta_prime < a.exact_threshold ? Verdict::ExactBeneficial
                                                       : Verdict::ExactHarmful;
  }
  return a;
}

}  // namespace coopw
