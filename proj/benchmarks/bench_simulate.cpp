#include <benchmark/benchmark.h>

#include "cwscaler/model.hpp"
#include "cwscaler/simulate.hpp"

namespace {

void BM_MhStep(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  cw::RngStream rng({12345, 0});
  cw::SpinState spins = cw::SpinState::all_up(state.range(0));
  for (auto _ : state) {
    cw::mh_step(spins, params, rng);
    benchmark::DoNotOptimize(spins.upCount);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MhStep)->Arg(100)->Arg(10'000)->Arg(1'000'000);

void BM_CtmcEvents(benchmark::State& state) {
  const cw::ModelParams params(1.5, 0.2, state.range(0));
  const double m0 = cw::solve_cw_roots(params).m0;
  const auto kernel = cw::build_kernel(params, m0);
  cw::RngStream rng({777, 0});
  const double horizon = 1e5 / static_cast<double>(state.range(0));  // ~1e5 events
  for (auto _ : state) {
    auto path = cw::run_ctmc(kernel, horizon, rng);
    benchmark::DoNotOptimize(path.values.data());
    state.SetItemsProcessed(state.items_processed() +
                            static_cast<std::int64_t>(path.times.size()));
  }
}
BENCHMARK(BM_CtmcEvents)->Arg(1000)->Arg(10'000);

void BM_OuPath(benchmark::State& state) {
  const auto ou = cw::ou_params(cw::ModelParams(1.5, 0.2));
  cw::RngStream rng({31337, 0});
  for (auto _ : state) {
    auto path = cw::run_ou(ou, 100.0, 0.01, rng);
    benchmark::DoNotOptimize(path.values.data());
  }
}
BENCHMARK(BM_OuPath);

}  // namespace

BENCHMARK_MAIN();
