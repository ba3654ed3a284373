#include <benchmark/benchmark.h>

#include "cuberep/embedding.hpp"
#include "cuberep/generators.hpp"

using namespace cuberep;

static void BM_LevelProfile(benchmark::State& state) {
  const CubeSubgraph g = random_subgraph(static_cast<int>(state.range(0)), 0.9, 1);
  for (auto _ : state) benchmark::DoNotOptimize(level_profile(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_LevelProfile)->DenseRange(8, 14, 2);

static void BM_FlipTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CubeSubgraph g = random_subgraph(n, 0.9, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_flip_table(g, n / 2));
}
BENCHMARK(BM_FlipTable)->DenseRange(8, 14, 2);

static void BM_SelectAnchor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlipTable t = build_flip_table(random_subgraph(n, 0.9, 3), n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(select_anchor(t, 3));
}
BENCHMARK(BM_SelectAnchor)->DenseRange(8, 12, 2);

static void BM_FindCopyC8(benchmark::State& state) {
  const CubeSubgraph g = full_cube(static_cast<int>(state.range(0)));
  const Representation r = gen_even_cycle_representation(4);
  for (auto _ : state) benchmark::DoNotOptimize(find_copy(g, r));
}
BENCHMARK(BM_FindCopyC8)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_FindCopyC14Random(benchmark::State& state) {
  const CubeSubgraph g = random_subgraph(static_cast<int>(state.range(0)), 0.9, 4);
  const Representation r = gen_odd_cycle_representation(7);
  FindCopyOptions o;
  o.exhaustive = true;
  for (auto _ : state) benchmark::DoNotOptimize(find_copy(g, r, o));
}
BENCHMARK(BM_FindCopyC14Random)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
