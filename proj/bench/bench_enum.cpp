// Serial references against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "homcfg/enum_search.hpp"
#include "homcfg/polygon_quiver.hpp"

using namespace homcfg;

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const CyContext ctx(static_cast<int>(-state.range(0)));
  const Window win(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_configs_serial(ctx, win, {.emit = false}).count);
}

void BM_SweepParallel(benchmark::State& state) {
  const CyContext ctx(static_cast<int>(-state.range(0)));
  const Window win(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_configs(ctx, win, {.emit = false}).count);
}

void BM_MaximalSerial(benchmark::State& state) {
  const CyContext ctx(static_cast<int>(-state.range(0)));
  const Window win(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_compatible_serial(ctx, win).count);
}

void BM_MaximalParallel(benchmark::State& state) {
  const CyContext ctx(static_cast<int>(-state.range(0)));
  const Window win(1, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_compatible(ctx, win).count);
}

void BM_DiagonalsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagonal_configs_serial(n, m, false).count);
}

void BM_DiagonalsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagonal_configs(n, m, false).count);
}

void sweep_args(benchmark::internal::Benchmark* b) {
  for (int w : {1, 2}) b->Args({w, 16})->Args({w, 22});
}

void maximal_args(benchmark::internal::Benchmark* b) {
  for (int w : {1, 2}) b->Args({w, 12})->Args({w, 16});
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Apply(sweep_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Apply(sweep_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaximalSerial)->Apply(maximal_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalParallel)->Apply(maximal_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DiagonalsSerial)->Args({8, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagonalsParallel)->Args({8, 1})->Args({6, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
