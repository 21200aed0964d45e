#include <benchmark/benchmark.h>

#include "nkayles/generators.hpp"
#include "nkayles/kernel.hpp"
#include "nkayles/kset.hpp"
#include "nkayles/nimber.hpp"
#include "nkayles/structure.hpp"

using namespace nkayles;

namespace {

void BM_NimberSpider(benchmark::State& state) {
  const Graph g = generate(Spider{static_cast<std::size_t>(state.range(0))});
  std::size_t entries = 0;
  for (auto _ : state) {
    MemoTable memo;
    benchmark::DoNotOptimize(nimber(g, memo));
    entries = memo.stats().entries;
  }
  state.counters["n"] = static_cast<double>(g.size());
  state.counters["memo"] = static_cast<double>(entries);
}
BENCHMARK(BM_NimberSpider)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_NimberGnp(benchmark::State& state) {
  const Graph g = generate(Gnp{static_cast<std::size_t>(state.range(0)), 0.3, 11});
  for (auto _ : state) benchmark::DoNotOptimize(nimber(g));
  state.counters["n"] = static_cast<double>(g.size());
}
BENCHMARK(BM_NimberGnp)->DenseRange(12, 28, 4)->Unit(benchmark::kMicrosecond);

void BM_NimberPath(benchmark::State& state) {
  const Graph g = generate(Path{static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(nimber(g));
}
BENCHMARK(BM_NimberPath)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_EnumerateKsets(benchmark::State& state) {
  const Graph g = generate(Spider{static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ksets(g));
}
BENCHMARK(BM_EnumerateKsets)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

// Solve time with and without the kernel on a wide blowup.
void BM_SolveBlowup(benchmark::State& state) {
  const bool reduce = state.range(0) != 0;
  const Graph base = generate(Path{5});
  const Graph g = generate(Blowup{base, {4, 3, 5, 2, 4}, {ModuleKind::independent,
                                                          ModuleKind::clique,
                                                          ModuleKind::independent,
                                                          ModuleKind::clique,
                                                          ModuleKind::independent}});
  for (auto _ : state) {
    if (reduce) {
      benchmark::DoNotOptimize(nimber(kernelize(g).graph));
    } else {
      benchmark::DoNotOptimize(nimber(g));
    }
  }
  state.SetLabel(reduce ? "kernel" : "direct");
}
BENCHMARK(BM_SolveBlowup)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Kernelize(benchmark::State& state) {
  const Graph g = generate(Gnp{static_cast<std::size_t>(state.range(0)), 0.5, 3});
  for (auto _ : state) benchmark::DoNotOptimize(kernelize(g));
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(8, 64);

void BM_ModularDecomposition(benchmark::State& state) {
  const Graph g = generate(Gnp{static_cast<std::size_t>(state.range(0)), 0.5, 5});
  for (auto _ : state) benchmark::DoNotOptimize(modular_decomposition(g));
}
BENCHMARK(BM_ModularDecomposition)->RangeMultiplier(2)->Range(8, 64);

void BM_MinimumVertexCover(benchmark::State& state) {
  const Graph g = generate(Gnp{static_cast<std::size_t>(state.range(0)), 0.2, 9});
  for (auto _ : state) benchmark::DoNotOptimize(minimum_vertex_cover(g));
}
BENCHMARK(BM_MinimumVertexCover)->DenseRange(10, 40, 10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
