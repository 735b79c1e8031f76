#include <benchmark/benchmark.h>

#include <cstdint>

#include "sympexp/expmap.hpp"
#include "sympexp/oracle.hpp"
#include "sympexp/squeeze.hpp"

namespace {

using namespace sympexp;

void BM_FuzzParallel(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_expmap(42, count, 3.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FuzzSerial(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_expmap_serial(42, count, 3.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

Trajectory circle(std::int64_t steps) {
  return circular_trajectory({1.0, 0.3}, {0.2, -0.7}, 0.0, 6.283185307, static_cast<int>(steps));
}

void BM_TransformParallel(benchmark::State& state) {
  const Trajectory t = circle(state.range(0));
  const Mat4 m = squeeze_matrix({0.6, 0.3, 1.0, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(transform_trajectory(t, m));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TransformSerial(benchmark::State& state) {
  const Trajectory t = circle(state.range(0));
  const Mat4 m = squeeze_matrix({0.6, 0.3, 1.0, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(transform_trajectory_serial(t, m));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExpClosedForm(benchmark::State& state) {
  const Generator g = random_generator(7, 0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(exp_sp4(g));
}

void BM_ExpSeries(benchmark::State& state) {
  const Mat4 m = lie_matrix(random_generator(7, 0, 3.0));
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(m));
}

}  // namespace

BENCHMARK(BM_FuzzParallel)->Arg(1000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_FuzzSerial)->Arg(1000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_TransformParallel)->Arg(256)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_TransformSerial)->Arg(256)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_ExpClosedForm);
BENCHMARK(BM_ExpSeries);

BENCHMARK_MAIN();
