// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "coopw/errors.hpp"

namespace coopw {

// Fixed shape constant of barry_approx. Not tunable.
inline constexpr double kBarryAlpha = 0.3205;

// Coefficient c of the bound family F(u, c) = -1 - sqrt(2u) - c*u.
// Members of the family bound W_{-1}(-e^{-u-1}) from below for c >= 1 (all u > 0),
// from above for c <= 2/3 (all u > 0), and from below for c = 3/4 on u in (0, 1).
struct BoundCoefficient {
  double value = 0.0;
};

inline constexpr BoundCoefficient kTightestUpperCoeff{2.0 / 3.0};
inline constexpr BoundCoefficient kTightestLowerCoeff{1.0};
inline constexpr BoundCoefficient kUnitIntervalLowerCoeff{0.75};

// x - (x^2/2) * (1/(1 + x/3))^2, an upper bound of ln(1+x) for x >= 0.
// Equality only at x = 0. Throws DomainError for x < 0.
[[nodiscard]] double log_upper_bound(double x);

// x - x^2/2, a lower bound of ln(1+x) for x >= 0. Throws DomainError for x < 0.
[[nodiscard]] double log_lower_bound(double x);

// g(x) = x - ln(1+x) for x > -1. Evaluated by series for |x| < 1/2, where the
// direct subtraction cancels. Throws DomainError for x <= -1.
[[nodiscard]] double log_gap(double x);

struct GapSandwich {
  double lower = 0.0;   // (2/3) * g(x)
  double middle = 0.0;  // x - sqrt(2 g(x))
  double upper = 0.0;   // g(x)
};

// The strict two-sided enclosure (2/3) g(x) < x - sqrt(2 g(x)) < g(x), x > 0.
// The middle member is computed as (x^2 - 2g) / (x + sqrt(2g)) with a series
// numerator for small x so the strict ordering survives in floating point.
[[nodiscard]] GapSandwich log_gap_sandwich(double x);

// F(u, c) = -1 - sqrt(2u) - c*u. Throws DomainError for u < 0.
[[nodiscard]] double bound_family(double u, BoundCoefficient c);

struct Wm1Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Tractable enclosure of W_{-1}(-e^{-u-1}) for u > 0:
//   lower = F(u, 3/4) for u < 1 (tighter), F(u, 1) otherwise;
//   upper = F(u, 2/3).
// Throws DomainError for u <= 0.
[[nodiscard]] Wm1Bounds wm1_bounds(double u);

// Closed-form approximation of W_{-1}(z) on -1/e <= z < 0:
//   ln(-z) - (2/alpha) * (1 - 1/(1 + alpha * sqrt(-(1 + ln(-z))/2))).
// Relative error stays a fraction of a percent over the domain.
// Throws DomainError outside [-1/e, 0).
[[nodiscard]] double barry_approx(double z);

}  // namespace coopw
