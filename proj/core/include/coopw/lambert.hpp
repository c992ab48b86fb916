// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "coopw/errors.hpp"

namespace coopw {

// 1/e, the magnitude of the real branch point of w * e^w.
inline constexpr double kInvE = 0.36787944117144232159552377016146086745;

// Real branches of the Lambert W function (solutions of w * e^w = z).
//   Principal: W >= -1, defined for z >= -1/e.
//   MinusOne:  W <= -1, defined for -1/e <= z < 0.
enum class Branch { Principal, MinusOne };

struct EvalOptions {
  // Residual acceptance bound, relative to max(|z|, abs_floor).
  double rel_tolerance = 1e-12;
  // Scale floor so evaluations at tiny |z| still carry a meaningful bound.
  double abs_floor = 1e-300;
  int max_iterations = 64;
  // The truncated branch-point series is accepted directly (no iteration)
  // when e*z + 1 < branch_point_window.
  double branch_point_window = 1e-6;
};

// A converged evaluation together with its certificate.
struct WEvaluation {
  double value = 0.0;
  double residual = 0.0;  // |value * exp(value) - z|
  int iterations = 0;     // refinement steps taken (0 when a closed form was accepted)
  double z = 0.0;
};

// Evaluate the requested real branch of W at z.
//
// Postcondition: residual <= rel_tolerance * max(|z|, abs_floor), and value lies
// in the branch range. Inputs within 4 ulp below -1/e are treated as -1/e.
//
// Throws DomainError (z outside the branch domain, or invalid options) and
// ConvergenceError (iteration budget exhausted without meeting the bound).
[[nodiscard]] WEvaluation lambert_w(double z, Branch branch, const EvalOptions& options = {});

// Truncated expansion around the branch point z = -1/e:
//   W = -1 + p - p^2/3 + (11/72) p^3,  p = +-sqrt(2 (e z + 1)).
// Sign of p selects the branch. Throws DomainError when e*z + 1 < 0.
[[nodiscard]] double branch_point_series(double z, Branch branch);

// |w * e^w - z|: how far (w, z) is from the defining equation.
[[nodiscard]] double residual(double w, double z);

// |w - (ln|z| - ln|w|)|: deviation from the logarithmic identity W = ln z - ln W.
// Requires w and z nonzero and of the same sign; throws DomainError otherwise.
[[nodiscard]] double log_identity_gap(double w, double z);

}  // namespace coopw
