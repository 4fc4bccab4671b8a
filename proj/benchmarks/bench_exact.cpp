#include <benchmark/benchmark.h>

#include "cwscaler/diagnostics.hpp"
#include "cwscaler/exact_distribution.hpp"
#include "cwscaler/lumped_kernel.hpp"
#include "cwscaler/model.hpp"

namespace {

void BM_ExactDistribution(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  for (auto _ : state) {
    auto dist = cw::exact_distribution(params);
    benchmark::DoNotOptimize(dist.probs.data());
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_ExactDistribution)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_BuildKernel(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  const double m0 = cw::solve_cw_roots(params).m0;
  for (auto _ : state) {
    auto kernel = cw::build_kernel(params, m0);
    benchmark::DoNotOptimize(kernel.pUp.data());
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_BuildKernel)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_EtaStatistics(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  const double m0 = cw::solve_cw_roots(params).m0;
  const auto dist = cw::exact_distribution(params);
  for (auto _ : state) {
    auto stats = cw::eta_statistics(dist, m0);
    benchmark::DoNotOptimize(stats.variance);
  }
}
BENCHMARK(BM_EtaStatistics)->Arg(10'000)->Arg(100'000);

void BM_SolveRoots(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2);
  for (auto _ : state) {
    auto roots = cw::solve_cw_roots(params);
    benchmark::DoNotOptimize(roots.m0);
  }
}
BENCHMARK(BM_SolveRoots);

void BM_KsDistance(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  const double m0 = cw::solve_cw_roots(params).m0;
  const auto dist = cw::exact_distribution(params);
  const auto ou = cw::ou_params(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cw::ks_distance(dist, m0, ou));
  }
}
BENCHMARK(BM_KsDistance)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
