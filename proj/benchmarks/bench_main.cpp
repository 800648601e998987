#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <vector>

#include "wcd/constructions.hpp"
#include "wcd/graph6.hpp"
#include "wcd/scan.hpp"
#include "wcd/wcdim.hpp"

namespace {

wcd::Graph random_graph(std::mt19937_64& rng, int order) {
  wcd::Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

void BM_MisEnumeration(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const wcd::Graph g = random_graph(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wcd::maximal_independent_sets(g).count());
}
BENCHMARK(BM_MisEnumeration)->Arg(10)->Arg(20)->Arg(40)->Arg(64);

void BM_WcdimProfileWitness(benchmark::State& state) {
  const wcd::Graph g = wcd::g10().graph;
  for (auto _ : state) benchmark::DoNotOptimize(wcd::wcdim_profile(g).wcdim_generic);
}
BENCHMARK(BM_WcdimProfileWitness);

void BM_WcdimProfileFamily(benchmark::State& state) {
  const wcd::Graph g = wcd::gn_family(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(wcd::wcdim_profile(g).wcdim_generic);
}
BENCHMARK(BM_WcdimProfileFamily)->Arg(5)->Arg(10)->Arg(20);

void BM_SmithNormalForm(benchmark::State& state) {
  const wcd::Graph g = wcd::gn_family(static_cast<int>(state.range(0))).graph;
  const wcd::IntMatrix a = wcd::associated_matrix(g, wcd::maximal_independent_sets(g));
  for (auto _ : state) benchmark::DoNotOptimize(wcd::invariant_factors(a).factors.size());
}
BENCHMARK(BM_SmithNormalForm)->Arg(5)->Arg(10)->Arg(20);

void BM_CanonicalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<wcd::Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(rng, static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wcd::canonical_form(graphs[k]));
    k = (k + 1) % graphs.size();
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(7)->Arg(8);

void BM_GenerateAllGraphs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wcd::generate_all_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_GenerateAllGraphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ScanOrder7(benchmark::State& state) {
  const std::vector<wcd::Graph> graphs = wcd::generate_all_graphs(7);
  for (auto _ : state) {
    const wcd::ScanSummary s = wcd::scan_graphs(graphs, static_cast<int>(state.range(0)), nullptr);
    benchmark::DoNotOptimize(s.dependent_found);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_ScanOrder7)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
