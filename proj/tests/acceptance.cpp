// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: eight end-to-end checks covering the numerical guarantees
// this library advertises. Each prints exactly one [PASS]/[FAIL] line; the
// process exits nonzero if any check fails. Tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "coopw/bounds.hpp"
#include "coopw/cooperation.hpp"
#include "coopw/lambert.hpp"
#include "coopw/montecarlo.hpp"
#include "oracle.hpp"

namespace {

constexpr double kEps = 2.220446049250313e-16;

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
  if (!ok) ++g_failures;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> grid(n);
  const double step = std::log(hi / lo) / double(n - 1);
  for (int i = 0; i < n; ++i) grid[i] = lo * std::exp(step * double(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// Admissible slack for comparing a computed W value against a closed form:
// four input ulps propagated through dW/dz, plus the oracle's own ulp-level
// termination error.
double branch_slack(double w) {
  return 4.0 * kEps * std::abs(w) / std::abs(1.0 + w) + 4.0 * kEps * (1.0 + std::abs(w));
}

double wm1_at(double u) {
  const double z = -std::exp(-1.0 - u);
  if (z < 0.0) return coopw::lambert_w(z, coopw::Branch::MinusOne).value;
  return coopw::test::wm1_from_u(u);
}

void criterion_1() {
  const auto start = Clock::now();
  const coopw::LinkBudget budget = coopw::budget_from_db(-0.983, 5.782, 5.0);
  const double floor = coopw::min_gamma(budget.theta, budget.theta_prime);
  const double floor_db = coopw::linear_to_db(floor).db;
  const double elapsed_ms = seconds_since(start) * 1e3;
  const bool ok = std::abs(floor_db - 14.925) <= 0.005 && elapsed_ms < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "minimum beneficial mean SNR example gives %.4f dB in %.4f ms", floor_db,
                elapsed_ms);
  report(1, ok, detail);
}

void criterion_2() {
  const auto start = Clock::now();
  const double edge = coopw::kInvE * (1.0 - 1e-12);
  std::size_t violations = 0;
  double worst = 0.0;
  for (double mag : log_spaced(1e-12, edge, 10000)) {
    const coopw::WEvaluation eval = coopw::lambert_w(-mag, coopw::Branch::MinusOne);
    worst = std::max(worst, eval.residual / mag);
    if (eval.residual > 1e-12 * mag) ++violations;
  }
  for (double z : log_spaced(1e-12, 1e6, 5000)) {
    const coopw::WEvaluation eval = coopw::lambert_w(z, coopw::Branch::Principal);
    worst = std::max(worst, eval.residual / z);
    if (eval.residual > 1e-12 * z) ++violations;
  }
  for (double mag : log_spaced(1e-12, edge, 5000)) {
    const coopw::WEvaluation eval = coopw::lambert_w(-mag, coopw::Branch::Principal);
    worst = std::max(worst, eval.residual / mag);
    if (eval.residual > 1e-12 * mag) ++violations;
  }
  const double elapsed = seconds_since(start);
  const bool ok = violations == 0 && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "residual certificates on 2e4 points: %zu violations, worst %.2e of |z|, %.2f s",
                violations, worst, elapsed);
  report(2, ok, detail);
}

void criterion_3() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  for (double u : log_spaced(1e-8, 1e3, 10000)) {
    const double w = wm1_at(u);
    const double slack = branch_slack(w);
    const double lower = coopw::bound_family(u, coopw::kTightestLowerCoeff);
    const double upper = coopw::bound_family(u, coopw::kTightestUpperCoeff);
    if (!(lower <= w + slack)) ++violations;
    if (!(w <= upper + slack)) ++violations;
    if (u < 1.0 - 1e-8) {
      const double tight = coopw::bound_family(u, coopw::kUnitIntervalLowerCoeff);
      if (!(tight <= w + slack)) ++violations;
    }
  }
  // Past u = 1 the tightened coefficient stops bounding: its curve crosses the
  // branch somewhere in (1, 20).
  bool crossed = false;
  double previous_gap = coopw::bound_family(1.0 + 1e-6, coopw::kUnitIntervalLowerCoeff) -
                        wm1_at(1.0 + 1e-6);
  for (double u : log_spaced(1.0 + 1e-6, 20.0, 400)) {
    const double gap = coopw::bound_family(u, coopw::kUnitIntervalLowerCoeff) - wm1_at(u);
    if ((gap > 0.0) != (previous_gap > 0.0)) crossed = true;
    previous_gap = gap;
  }
  const double elapsed = seconds_since(start);
  const bool ok = violations == 0 && crossed;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "branch enclosure on 1e4 offsets: %zu violations, tightened member %s past "
                "validity, %.2f s",
                violations, crossed ? "crosses" : "never crosses", elapsed);
  report(3, ok, detail);
}

void criterion_4() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  if (coopw::log_upper_bound(0.0) != 0.0) ++violations;
  if (coopw::log_lower_bound(0.0) != 0.0) ++violations;
  for (double x : log_spaced(1e-4, 1e6, 10000)) {
    const double truth = std::log1p(x);
    if (!(coopw::log_upper_bound(x) > truth)) ++violations;
    if (!(coopw::log_lower_bound(x) < truth)) ++violations;
  }
  for (double x : log_spaced(1e-8, 1e6, 10000)) {
    const coopw::GapSandwich s = coopw::log_gap_sandwich(x);
    if (!(s.lower < s.middle && s.middle < s.upper)) ++violations;
  }
  const double elapsed = seconds_since(start);
  const bool ok = violations == 0 && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "logarithm bound grids (2e4 points): %zu violations, %.2f s", violations, elapsed);
  report(4, ok, detail);
}

void criterion_5() {
  const auto start = Clock::now();
  std::mt19937_64 gen(0xC0FFEEull);
  std::uniform_real_distribution<double> ratio(1e-4, 1.0 - 1e-4);
  std::uniform_real_distribution<double> snr_exp(-1.0, 3.0);
  std::size_t violations = 0;
  double worst_mismatch = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double gamma_bar = std::pow(10.0, snr_exp(gen));
    const double theta = ratio(gen) * gamma_bar;
    const double safe = coopw::safe_threshold(theta, gamma_bar);
    const double exact = coopw::exact_threshold(theta, gamma_bar);
    const double avoid = coopw::avoid_threshold(theta, gamma_bar);
    if (!(safe <= exact && exact <= avoid)) ++violations;
    const double p_nc = coopw::outage_noncoop(theta, gamma_bar);
    const double mismatch = std::abs(coopw::outage_coop(exact, gamma_bar) - p_nc) / p_nc;
    worst_mismatch = std::max(worst_mismatch, mismatch);
    if (mismatch > 1e-9) ++violations;
  }
  const double elapsed = seconds_since(start);
  const bool ok = violations == 0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "threshold sandwich and crossing identity on 1e3 budgets: %zu violations, worst "
                "crossing mismatch %.1e, %.2f s",
                violations, worst_mismatch, elapsed);
  report(5, ok, detail);
}

void criterion_6() {
  const auto start = Clock::now();
  std::mt19937_64 gen(0xFACADEull);
  std::uniform_real_distribution<double> ratio(1e-4, 1.0 - 1e-4);
  std::uniform_real_distribution<double> snr_exp(-1.0, 3.0);
  std::uniform_real_distribution<double> spread(0.0, 0.8);
  std::size_t disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const double gamma_bar = std::pow(10.0, snr_exp(gen));
    const double theta = ratio(gen) * gamma_bar;
    const double theta_prime = theta * std::pow(10.0, spread(gen));
    const coopw::CooperationAssessment a = coopw::assess({theta, theta_prime, gamma_bar});
    const bool says_beneficial = a.verdict == coopw::Verdict::CertainlyBeneficial ||
                                 a.verdict == coopw::Verdict::ExactBeneficial;
    if (says_beneficial != (a.p_c < a.p_nc)) ++disagreements;
  }
  const double elapsed = seconds_since(start);
  const bool ok = disagreements == 0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "verdict agrees with outage formulas on 1e3 budgets: %zu disagreements, %.2f s",
                disagreements, elapsed);
  report(6, ok, detail);
}

void criterion_7() {
  const auto start = Clock::now();
  std::mt19937_64 gen(0x5EEDull);
  std::uniform_real_distribution<double> snr_exp(-0.5, 2.0);
  std::uniform_real_distribution<double> factor(0.05, 2.0);
  std::bernoulli_distribution coin(0.5);
  const std::uint64_t n = 1000000;
  int within = 0;
  coopw::SimSpec first{};
  for (int i = 0; i < 20; ++i) {
    coopw::SimSpec spec{};
    spec.n_trials = n;
    spec.seed = gen();
    spec.gamma_bar = std::pow(10.0, snr_exp(gen));
    spec.threshold = factor(gen) * spec.gamma_bar;
    spec.mode = coin(gen) ? coopw::FadingMode::Cooperative : coopw::FadingMode::NonCooperative;
    if (i == 0) first = spec;
    const double p = spec.mode == coopw::FadingMode::Cooperative
                         ? coopw::outage_coop(spec.threshold, spec.gamma_bar)
                         : coopw::outage_noncoop(spec.threshold, spec.gamma_bar);
    const double se = std::sqrt(p * (1.0 - p) / double(n));
    const coopw::SimResult result = coopw::simulate(spec);
    if (std::abs(result.estimate - p) <= 4.0 * se) ++within;
  }
  const bool deterministic = coopw::simulate(first).outage_count ==
                             coopw::simulate(first).outage_count;
  const bool thread_invariant = coopw::simulate(first, 4).outage_count ==
                                coopw::simulate(first, 1).outage_count;
  const double elapsed = seconds_since(start);
  const bool ok = within >= 19 && deterministic && thread_invariant && elapsed < 30.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "Monte Carlo vs closed forms: %d/20 configs within 4 standard errors, "
                "deterministic %s, thread-invariant %s, %.1f s",
                within, deterministic ? "yes" : "no", thread_invariant ? "yes" : "no", elapsed);
  report(7, ok, detail);
}

void criterion_8() {
  const auto start = Clock::now();
  std::size_t violations = 0;

  const double theta_fixed = coopw::db_to_linear(coopw::Decibel{5.0});
  double previous = 0.0;
  bool have_previous = false;
  for (int i = 0; i <= 200; ++i) {
    const double gamma_db = 5.0 + 20.0 * double(i) / 200.0;
    const double gamma_bar = coopw::db_to_linear(coopw::Decibel{gamma_db});
    const double exact = coopw::exact_threshold(theta_fixed, gamma_bar);
    if (have_previous && !(exact > previous)) ++violations;
    previous = exact;
    have_previous = true;
    if (!(coopw::safe_threshold(theta_fixed, gamma_bar) <= exact)) ++violations;
    if (theta_fixed < gamma_bar &&
        !(exact <= coopw::avoid_threshold(theta_fixed, gamma_bar))) ++violations;
  }

  const double gamma_fixed = coopw::db_to_linear(coopw::Decibel{5.0});
  have_previous = false;
  for (int i = 0; i <= 200; ++i) {
    const double theta_db = -15.0 + 20.0 * double(i) / 200.0;
    const double theta = coopw::db_to_linear(coopw::Decibel{theta_db});
    const double exact = coopw::exact_threshold(theta, gamma_fixed);
    if (have_previous && !(exact > previous)) ++violations;
    previous = exact;
    have_previous = true;
    if (!(coopw::safe_threshold(theta, gamma_fixed) <= exact)) ++violations;
    if (theta < gamma_fixed &&
        !(exact <= coopw::avoid_threshold(theta, gamma_fixed))) ++violations;
  }

  const double elapsed = seconds_since(start);
  const bool ok = violations == 0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "decision border rises along both sweep axes with envelopes intact: %zu "
                "violations, %.2f s",
                violations, elapsed);
  report(8, ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
