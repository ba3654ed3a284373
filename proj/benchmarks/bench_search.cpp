#include <benchmark/benchmark.h>

#include "cuberep/extremal.hpp"
#include "cuberep/generators.hpp"
#include "cuberep/representation.hpp"

using namespace cuberep;

static void BM_FindAbstractCopyCycle(benchmark::State& state) {
  const CubeSubgraph g = random_subgraph(6, 0.8, 9);
  const AbstractGraph h = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_abstract_copy(g, h));
}
BENCHMARK(BM_FindAbstractCopyCycle)->DenseRange(4, 12, 4);

static void BM_SearchRepresentationC8(benchmark::State& state) {
  const AbstractGraph h = cycle_graph(8);
  for (auto _ : state) benchmark::DoNotOptimize(search_representation(h, 2, 4));
}
BENCHMARK(BM_SearchRepresentationC8)->Unit(benchmark::kMillisecond);

static void BM_RefuteC6(benchmark::State& state) {
  const AbstractGraph h = cycle_graph(6);
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_representation(h, 3, l));
}
BENCHMARK(BM_RefuteC6)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_ExCubeC4(benchmark::State& state) {
  const AbstractGraph h = cycle_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(ex_cube(static_cast<int>(state.range(0)), h));
}
BENCHMARK(BM_ExCubeC4)->DenseRange(2, 3, 1)->Unit(benchmark::kMillisecond);

static void BM_ExHypergraphC4(benchmark::State& state) {
  const KUniformHypergraph c4(4, 2, {0b0011, 0b0110, 0b1100, 0b1001});
  for (auto _ : state) benchmark::DoNotOptimize(ex_hypergraph(static_cast<int>(state.range(0)), c4));
}
BENCHMARK(BM_ExHypergraphC4)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);
