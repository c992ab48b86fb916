// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "coopw/errors.hpp"

namespace coopw {

// Counter-based generator used by the simulator. Draw k of a stream is a pure
// function of (seed, k): SplitMix64's finalizer applied to seed + (k+1)*golden.
// This makes every trial's randomness independent of how trials are chunked
// across threads, so results are bit-identical for any thread count, and the
// sequence is reproducible on any platform with IEEE-754 doubles.
namespace rng {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Uniform draw on (0, 1]; never 0, so logs are safe.
inline double unit_draw(std::uint64_t seed, std::uint64_t index) noexcept {
  const std::uint64_t r = mix64(seed + (index + 1) * kGolden);
  return static_cast<double>((r >> 11) + 1) * 0x1.0p-53;
}

// Exponential draw by inverse CDF: -mean * ln(U).
double exponential_draw(double mean, std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace rng

enum class FadingMode { NonCooperative, Cooperative };

struct SimSpec {
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;
  double gamma_bar = 0.0;  // mean SNR, linear
  double threshold = 0.0;  // decoding threshold, linear
  FadingMode mode = FadingMode::NonCooperative;
};

struct SimResult {
  std::uint64_t outage_count = 0;
  std::uint64_t n_trials = 0;
  double estimate = 0.0;   // outage_count / n_trials
  double std_error = 0.0;  // sqrt(p(1-p)/n), binomial
};

// Empirical outage probability under Rayleigh fading.
//   NonCooperative: one exponential SNR of mean gamma_bar per trial,
//                   outage when it falls below threshold.
//   Cooperative:    two independent exponentials of mean gamma_bar/2 (half power
//                   per hop), combined by MRC (summed), outage when the sum
//                   falls below threshold.
// Deterministic for a fixed seed regardless of n_threads.
[[nodiscard]] SimResult simulate(const SimSpec& spec, int n_threads = 1);

enum class ProbeVerdict { Beneficial, Harmful, Indeterminate };

[[nodiscard]] const char* to_string(ProbeVerdict v);

struct BoundaryProbe {
  double theta_prime = 0.0;
  SimResult cooperative;
  SimResult noncooperative;
  // (p_nc - p_c) / combined std error; positive favors cooperation.
  double z_score = 0.0;
  ProbeVerdict verdict = ProbeVerdict::Indeterminate;
};

struct BoundaryReport {
  double theta = 0.0;
  double gamma_bar = 0.0;
  std::uint64_t n_trials = 0;
  double exact_threshold = 0.0;
  BoundaryProbe below;  // theta_prime = below_factor * exact_threshold
  BoundaryProbe above;  // theta_prime = above_factor * exact_threshold
  bool flipped = false;  // below resolved beneficial AND above resolved harmful
};

// Simulate just below and just above the analytic boundary and report whether
// the empirical ordering flips. A probe closer than ~3 combined standard errors
// is reported Indeterminate rather than forced to a side. Requires
// 0 < theta < gamma_bar so the boundary itself is certified.
[[nodiscard]] BoundaryReport validate_boundary(double theta, double gamma_bar,
                                               std::uint64_t n_trials, std::uint64_t seed,
                                               double below_factor = 0.9,
                                               double above_factor = 1.1, int n_threads = 1);

}  // namespace coopw
