// SPDX-License-Identifier: Apache-2.0
//
// Independent reference solutions used only by tests. Pure bisection on
// monotone formulations — slow, but sharing no code or algorithm with the
// library under test.
#pragma once

#include <cmath>
#include <stdexcept>

namespace coopw::test {

// w e^w is strictly decreasing on (-inf, -1]; solve w e^w = z for z in (-1/e, 0).
inline double wm1_from_z(double z) {
  if (!(z > -0.3678794411714424) || !(z < 0.0)) {
    throw std::invalid_argument("wm1_from_z: z outside (-1/e, 0)");
  }
  double lo = -745.0;  // w e^w ~ -4e-321, above any z here
  double hi = -1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid * std::exp(mid) > z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// w e^w is strictly increasing on [-1, inf); solve w e^w = z for z >= -1/e.
inline double w0_from_z(double z) {
  if (!(z >= -0.3678794411714424)) throw std::invalid_argument("w0_from_z: z below -1/e");
  double lo = -1.0;
  double hi = 710.0;  // w e^w overflows double range before this
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid * std::exp(mid) < z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// W_{-1}(-e^{-u-1}) without forming -e^{-u-1}: on w < -1,
//   w e^w = -e^{-u-1}  <=>  w + ln(-w) = -(1+u),
// and the left side is strictly increasing in w. Usable far past the range
// where -e^{-u-1} underflows.
inline double wm1_from_u(double u) {
  if (!(u > 0.0)) throw std::invalid_argument("wm1_from_u: u must be > 0");
  const double target = -(1.0 + u);
  double lo = -2.0 - std::sqrt(2.0 * u) - u;  // strictly below the solution
  double hi = -1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid + std::log(-mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace coopw::test
