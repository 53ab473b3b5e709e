// Serial reference vs OpenMP kernels on the two data-parallel hot paths:
// the separation sweep and batched trajectory summaries.

#include <benchmark/benchmark.h>

#include <random>

#include "bicpair/sweep.hpp"

using namespace bicpair;

namespace {

BicMode bench_mode() {
  BicMode m;
  m.lambda_bic = 552.0e-9;
  m.a = 400e-9;
  m.purcell = 46.9;
  m.beta = 0.4480;
  m.k_res = 0.581e6;
  m.c_n = {0.273, 0.516, 0.160, 0.048, 0.001};
  return m;
}

std::vector<RateSet> bench_rates(int n) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.2, 1.0);
  std::vector<RateSet> sets;
  sets.reserve(n);
  for (int i = 0; i < n; ++i) {
    RateSet r;
    r.gamma11 = 10.0 * u(rng);
    r.gamma22 = r.gamma11;
    r.gamma12 = 0.9 * r.gamma11 * u(rng);
    r.omega12 = u(rng) - 0.6;
    r.gamma0 = 1.0;
    sets.push_back(r);
  }
  return sets;
}

}  // namespace

static void BM_sweep_serial(benchmark::State& state) {
  const BicMode m = bench_mode();
  const auto grid = linspace(5 * m.a, 100 * m.a, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_cmax_serial(grid, m, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sweep_serial)->Arg(1 << 14)->Arg(1 << 18);

static void BM_sweep_parallel(benchmark::State& state) {
  const BicMode m = bench_mode();
  const auto grid = linspace(5 * m.a, 100 * m.a, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_cmax_parallel(grid, m, 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sweep_parallel)->Arg(1 << 14)->Arg(1 << 18);

static void BM_batch_serial(benchmark::State& state) {
  const auto sets = bench_rates(state.range(0));
  SimulationGrid grid;
  grid.t_end = 2.0;
  grid.n_steps = 101;
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_summaries_serial(sets, excited_ground_state(), grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_batch_serial)->Arg(64)->Arg(512);

static void BM_batch_parallel(benchmark::State& state) {
  const auto sets = bench_rates(state.range(0));
  SimulationGrid grid;
  grid.t_end = 2.0;
  grid.n_steps = 101;
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_summaries_parallel(sets, excited_ground_state(), grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_batch_parallel)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
