#include <benchmark/benchmark.h>

#include "selfdual/algebra.hpp"
#include "selfdual/enumerate.hpp"
#include "selfdual/ramsey.hpp"
#include "selfdual/search.hpp"

using namespace selfdual;

static void BM_EnumerateConnections(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    for (int K = 0; K <= L; ++K) n += enumerate_connections(L, K).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateConnections)->DenseRange(4, 8, 2);

static void BM_ComposeAll(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const auto inner = enumerate_connections(L, 3);
  const auto outer = enumerate_connections(3, 2);
  for (auto _ : state)
    for (const auto& b : inner)
      for (const auto& a : outer) benchmark::DoNotOptimize(compose(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inner.size() * outer.size()));
}
BENCHMARK(BM_ComposeAll)->DenseRange(4, 7);

static void BM_CopyFamily(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(copy_family(N, 2, 3, SpaceMode::connections));
}
BENCHMARK(BM_CopyFamily)->DenseRange(3, 5);

static void BM_FindBadColoring(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const Hypergraph g = copy_family(N, 2, 3, SpaceMode::injections_only).hypergraph();
  for (auto _ : state) benchmark::DoNotOptimize(find_bad_coloring(g, 2));
}
BENCHMARK(BM_FindBadColoring)->DenseRange(4, 6);
BENCHMARK_MAIN();
