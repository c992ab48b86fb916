// SPDX-License-Identifier: Apache-2.0
//
// Real-branch Lambert W. Strategy:
//   * inside a narrow window around the branch point z = -1/e the truncated
//     series is already beyond double round-off, so it is returned directly;
//   * elsewhere a branch-dependent starting guess (series / closed-form
//     approximation / rational fit / asymptotic logs) is polished by Halley
//     steps on f(w) = w e^w - z until the residual stops improving, and the
//     result is certified against the contract bound.

#include "coopw/lambert.hpp"

#include <cmath>
#include <limits>

#include "coopw/bounds.hpp"

namespace coopw {
namespace {

constexpr double kE = 2.71828182845904523536028747135266249776;
constexpr double kMinusInvE = -kInvE;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double signed_sqrt_offset(double s, Branch branch) {
  // p = +-sqrt(2 (e z + 1)); the minus sign walks down the lower branch.
  const double p = std::sqrt(2.0 * s);
  return branch == Branch::Principal ? p : -p;
}

double series_at_offset(double s, Branch branch) {
  const double p = signed_sqrt_offset(s, branch);
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// e*z + 1, clamped below at 0. The plain product is monotone in z and lands on
// exactly 0 at the representable branch point, which the series relies on.
double branch_offset(double z) {
  const double s = kE * z + 1.0;
  return s < 0.0 ? 0.0 : s;
}

double initial_guess(double z, double s, Branch branch) {
  if (s < 0.25) return series_at_offset(s, branch);
  if (branch == Branch::MinusOne) return barry_approx(z);
  if (z > kE) {
    const double l = std::log(z);
    return l - std::log(l);
  }
  // Rational start for the principal mid-range (-1/e, e]: exact at z = 0 and
  // z = e, slope 1 at the origin, and always inside the Halley basin.
  return z / (1.0 + (1.0 - kInvE) * z);
}

void validate_options(const EvalOptions& o) {
  if (!(o.rel_tolerance > 0.0) || !(o.abs_floor > 0.0) || o.max_iterations < 1 ||
      !(o.branch_point_window > 0.0)) {
    throw DomainError("lambert_w: invalid EvalOptions");
  }
}

}  // namespace

WEvaluation lambert_w(double z, Branch branch, const EvalOptions& options) {
  validate_options(options);
  if (std::isnan(z)) throw DomainError("lambert_w: z is NaN");

  // Tolerate marginal undershoot of the branch point (up to 4 ulp).
  double lo = kMinusInvE;
  for (int i = 0; i < 4; ++i) lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
  if (z < lo) throw DomainError("lambert_w: z below -1/e");
  if (z < kMinusInvE) z = kMinusInvE;
  if (branch == Branch::MinusOne && z >= 0.0) {
    throw DomainError("lambert_w: lower branch requires z < 0");
  }

  WEvaluation out;
  out.z = z;
  if (z == kMinusInvE) {
    out.value = -1.0;
    out.residual = 0.0;
    return out;
  }

  const double s = branch_offset(z);
  if (s < options.branch_point_window) {
    // Truncation error here is O((2s)^2) in W, far below the residual bound.
    out.value = series_at_offset(s, branch);
    out.residual = residual(out.value, z);
    return out;
  }

  const double scale = std::max(std::abs(z), options.abs_floor);
  const double accept = options.rel_tolerance * scale;
  const double floor = 4.0 * kEps * scale;

  double w = initial_guess(z, s, branch);
  double best_w = w;
  double best_res = std::numeric_limits<double>::infinity();
  double prev_res = std::numeric_limits<double>::infinity();
  int steps = 0;
  for (;;) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double res = std::abs(f);
    if (res < best_res) {
      best_res = res;
      best_w = w;
    }
    // Run past the acceptance bound down to the round-off floor; extra steps
    // are nearly free and the downstream thresholds want eps-level values.
    if (res <= floor || res >= prev_res || steps >= options.max_iterations) break;
    prev_res = res;
    const double wp1 = w + 1.0;
    const double halley = ew * wp1 - 0.5 * (w + 2.0) * f / wp1;
    double step = f / halley;
    if (!std::isfinite(step)) step = f / (ew * wp1);  // Newton fallback
    double next = w - step;
    if (!std::isfinite(next)) break;
    // Pull iterates that left the branch range back toward w = -1.
    if (branch == Branch::MinusOne && next > -1.0) next = 0.5 * (w - 1.0);
    if (branch == Branch::Principal && next < -1.0) next = 0.5 * (w - 1.0);
    w = next;
    ++steps;
  }

  if (!(best_res <= accept)) {
    throw ConvergenceError("lambert_w: residual bound not met within max_iterations");
  }
  out.value = best_w;
  out.residual = best_res;
  out.iterations = steps;
  return out;
}

double branch_point_series(double z, Branch branch) {
  if (std::isnan(z) || z < kMinusInvE) {
    throw DomainError("branch_point_series: e*z + 1 < 0");
  }
  return series_at_offset(branch_offset(z), branch);
}

double residual(double w, double z) { return std::abs(w * std::exp(w) - z); }

double log_identity_gap(double w, double z) {
  if (w == 0.0 || z == 0.0 || std::isnan(w) || std::isnan(z) || ((w > 0.0) != (z > 0.0))) {
    throw DomainError("log_identity_gap: w and z must be nonzero with matching signs");
  }
  return std::abs(w - (std::log(std::abs(z)) - std::log(std::abs(w))));
}

}  // namespace coopw
