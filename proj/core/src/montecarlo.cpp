// SPDX-License-Identifier: Apache-2.0
//
// Rayleigh-fading outage simulator. Every trial draws through the counter
// generator declared in the header, so partitioning trials across threads
// changes only who computes each term of an integer sum — never the sum.

#include "coopw/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "coopw/cooperation.hpp"

namespace coopw {
namespace rng {

double exponential_draw(double mean, std::uint64_t seed, std::uint64_t index) noexcept {
  return -mean * std::log(unit_draw(seed, index));
}

}  // namespace rng

namespace {

std::uint64_t count_outages(const SimSpec& spec, std::uint64_t begin, std::uint64_t end) {
  std::uint64_t outages = 0;
  if (spec.mode == FadingMode::NonCooperative) {
    for (std::uint64_t t = begin; t < end; ++t) {
      const double snr = rng::exponential_draw(spec.gamma_bar, spec.seed, t);
      if (snr < spec.threshold) ++outages;
    }
  } else {
    const double hop_mean = 0.5 * spec.gamma_bar;
    for (std::uint64_t t = begin; t < end; ++t) {
      const double own = rng::exponential_draw(hop_mean, spec.seed, 2 * t);
      const double relayed = rng::exponential_draw(hop_mean, spec.seed, 2 * t + 1);
      if (own + relayed < spec.threshold) ++outages;
    }
  }
  return outages;
}

BoundaryProbe run_probe(double theta_prime, double gamma_bar, std::uint64_t n_trials,
                        std::uint64_t probe_seed, const SimResult& noncoop, int n_threads) {
  BoundaryProbe probe;
  probe.theta_prime = theta_prime;
  probe.noncooperative = noncoop;
  SimSpec spec;
  spec.n_trials = n_trials;
  spec.seed = probe_seed;
  spec.gamma_bar = gamma_bar;
  spec.threshold = theta_prime;
  spec.mode = FadingMode::Cooperative;
  probe.cooperative = simulate(spec, n_threads);
  const double spread = std::hypot(noncoop.std_error, probe.cooperative.std_error);
  if (spread == 0.0) return probe;  // Indeterminate: no statistical resolution
  probe.z_score = (noncoop.estimate - probe.cooperative.estimate) / spread;
  if (probe.z_score > 3.0) {
    probe.verdict = ProbeVerdict::Beneficial;
  } else if (probe.z_score < -3.0) {
    probe.verdict = ProbeVerdict::Harmful;
  }
  return probe;
}

}  // namespace

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Beneficial: return "beneficial";
    case ProbeVerdict::Harmful: return "harmful";
    case ProbeVerdict::Indeterminate: return "indeterminate";
  }
  throw DomainError("to_string(ProbeVerdict): invalid value");
}

SimResult simulate(const SimSpec& spec, int n_threads) {
  if (spec.n_trials < 1 || !(spec.gamma_bar > 0.0) || std::isnan(spec.threshold) ||
      spec.threshold < 0.0) {
    throw DomainError("simulate: requires n_trials >= 1, gamma_bar > 0, threshold >= 0");
  }
  if (n_threads < 1) throw DomainError("simulate: requires n_threads >= 1");

  const std::uint64_t n = spec.n_trials;
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(n_threads), n);
  std::uint64_t outages = 0;
  if (workers == 1) {
    outages = count_outages(spec, 0, n);
  } else {
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = n / workers;
    const std::uint64_t extra = n % workers;
    std::uint64_t begin = 0;
    for (std::uint64_t i = 0; i < workers; ++i) {
      const std::uint64_t end = begin + chunk + (i < extra ? 1 : 0);
      pool.emplace_back(
          [&spec, &counts, i, begin, end] { counts[i] = count_outages(spec, begin, end); });
      begin = end;
    }
    for (auto& worker : pool) worker.join();
    for (const auto c : counts) outages += c;
  }

  SimResult result;
  result.outage_count = outages;
  result.n_trials = n;
  result.estimate = static_cast<double>(outages) / static_cast<double>(n);
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(n));
  return result;
}

BoundaryReport validate_boundary(double theta, double gamma_bar, std::uint64_t n_trials,
                                 std::uint64_t seed, double below_factor, double above_factor,
                                 int n_threads) {
  if (!(theta > 0.0) || !(gamma_bar > 0.0) || !(theta / gamma_bar < 1.0)) {
    throw DomainError("validate_boundary: requires 0 < theta < gamma_bar");
  }
  if (!(below_factor > 0.0) || !(above_factor > below_factor)) {
    throw DomainError("validate_boundary: requires 0 < below_factor < above_factor");
  }

  BoundaryReport report;
  report.theta = theta;
  report.gamma_bar = gamma_bar;
  report.n_trials = n_trials;
  report.exact_threshold = exact_threshold(theta, gamma_bar);

  SimSpec direct;
  direct.n_trials = n_trials;
  direct.seed = rng::mix64(seed);
  direct.gamma_bar = gamma_bar;
  direct.threshold = theta;
  direct.mode = FadingMode::NonCooperative;
  const SimResult noncoop = simulate(direct, n_threads);

  report.below = run_probe(below_factor * report.exact_threshold, gamma_bar, n_trials,
                           rng::mix64(seed + rng::kGolden), noncoop, n_threads);
  report.above = run_probe(above_factor * report.exact_threshold, gamma_bar, n_trials,
                           rng::mix64(seed + 2 * rng::kGolden), noncoop, n_threads);
  report.flipped = report.below.verdict == ProbeVerdict::Beneficial &&
                   report.above.verdict == ProbeVerdict::Harmful;
  return report;
}

}  // namespace coopw
