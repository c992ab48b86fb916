// SPDX-License-Identifier: Apache-2.0
//
// Closed-form bounds on ln(1+x) and on the lower Lambert W branch, driven by
// the gap g(x) = x - ln(1+x). Small arguments run through alternating series
// so the strict sandwich ordering survives cancellation near zero.

#include "coopw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coopw/lambert.hpp"

namespace coopw {
namespace {

constexpr double kSeriesCutoff = 0.5;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_nonnegative(double x, const char* who) {
  if (std::isnan(x) || x < 0.0) throw DomainError(std::string(who) + ": requires x >= 0");
}

// 2 (x^3/3 - x^4/4 + x^5/5 - ...), i.e. x^2 - 2 g(x) without the cancellation.
double two_g_complement(double x) {
  double term = 2.0 * x * x * x / 3.0;
  double sum = term;
  for (int k = 4; k < 1000; ++k) {
    term *= -x * static_cast<double>(k - 1) / static_cast<double>(k);
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double log_upper_bound(double x) {
  require_nonnegative(x, "log_upper_bound");
  const double damp = 1.0 / (1.0 + x / 3.0);
  return x - 0.5 * x * x * damp * damp;
}

double log_lower_bound(double x) {
  require_nonnegative(x, "log_lower_bound");
  return x - 0.5 * x * x;
}

double log_gap(double x) {
  if (std::isnan(x) || x <= -1.0) throw DomainError("log_gap: requires x > -1");
  if (std::abs(x) >= kSeriesCutoff) return x - std::log1p(x);
  // x - ln(1+x) = x^2/2 - x^3/3 + ...; recurrence t_k = -t_{k-1} x (k-1)/k.
  double term = 0.5 * x * x;
  double sum = term;
  for (int k = 3; k < 1000; ++k) {
    term *= -x * static_cast<double>(k - 1) / static_cast<double>(k);
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

GapSandwich log_gap_sandwich(double x) {
  if (!(x > 0.0)) throw DomainError("log_gap_sandwich: requires x > 0");
  const double g = log_gap(x);
  const double root = std::sqrt(2.0 * g);
  // x - sqrt(2g) = (x^2 - 2g) / (x + sqrt(2g)); the ratio form keeps the
  // enclosure strict down to x ~ 1e-8 where the direct difference cancels.
  const double numer = x < kSeriesCutoff ? two_g_complement(x) : x * x - 2.0 * g;
  GapSandwich out;
  out.lower = (2.0 / 3.0) * g;
  out.middle = numer / (x + root);
  out.upper = g;
  return out;
}

double bound_family(double u, BoundCoefficient c) {
  if (std::isnan(u) || u < 0.0 || std::isnan(c.value)) {
    throw DomainError("bound_family: requires u >= 0");
  }
  return -1.0 - std::sqrt(2.0 * u) - c.value * u;
}

Wm1Bounds wm1_bounds(double u) {
  if (std::isnan(u) || !(u > 0.0)) throw DomainError("wm1_bounds: requires u > 0");
  Wm1Bounds out;
  out.lower = bound_family(u, u < 1.0 ? kUnitIntervalLowerCoeff : kTightestLowerCoeff);
  out.upper = bound_family(u, kTightestUpperCoeff);
  return out;
}

double barry_approx(double z) {
  if (std::isnan(z) || !(z < 0.0) || z < -kInvE) {
    throw DomainError("barry_approx: requires -1/e <= z < 0");
  }
  const double l = std::log(-z);
  // -(1 + ln(-z))/2 >= 0 on the domain; the clamp shields round-off at -1/e.
  const double r = std::max(0.0, -0.5 * (1.0 + l));
  return l - (2.0 / kBarryAlpha) * (1.0 - 1.0 / (1.0 + kBarryAlpha * std::sqrt(r)));
}

}  // namespace coopw
