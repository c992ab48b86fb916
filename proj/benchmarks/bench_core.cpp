// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "coopw/bounds.hpp"
#include "coopw/cooperation.hpp"
#include "coopw/lambert.hpp"
#include "coopw/montecarlo.hpp"

namespace {

void BM_LambertPrincipal(benchmark::State& state) {
  const double z = state.range(0) == 0 ? 1.0 : 1e6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coopw::lambert_w(z, coopw::Branch::Principal).value);
  }
}
BENCHMARK(BM_LambertPrincipal)->Arg(0)->Arg(1);

void BM_LambertMinusOne(benchmark::State& state) {
  const double z = state.range(0) == 0 ? -0.1 : -1e-12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coopw::lambert_w(z, coopw::Branch::MinusOne).value);
  }
}
BENCHMARK(BM_LambertMinusOne)->Arg(0)->Arg(1);

void BM_LambertNearBranchPoint(benchmark::State& state) {
  const double z = -0.36787944117;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coopw::lambert_w(z, coopw::Branch::MinusOne).value);
  }
}
BENCHMARK(BM_LambertNearBranchPoint);

void BM_BarryApprox(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coopw::barry_approx(-0.1));
}
BENCHMARK(BM_BarryApprox);

void BM_Wm1Bounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coopw::wm1_bounds(0.5).upper);
}
BENCHMARK(BM_Wm1Bounds);

void BM_ExactThreshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coopw::exact_threshold(3.1623, 10.0));
}
BENCHMARK(BM_ExactThreshold);

void BM_Assess(benchmark::State& state) {
  const coopw::LinkBudget budget{3.1623, 5.0, 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(coopw::assess(budget).verdict);
}
BENCHMARK(BM_Assess);

void BM_Simulate(benchmark::State& state) {
  coopw::SimSpec spec;
  spec.n_trials = static_cast<std::uint64_t>(state.range(0));
  spec.seed = 42;
  spec.gamma_bar = 10.0;
  spec.threshold = 3.7853;
  spec.mode = coopw::FadingMode::Cooperative;
  for (auto _ : state) benchmark::DoNotOptimize(coopw::simulate(spec).outage_count);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1 << 10)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
