#include <vector>

#include <benchmark/benchmark.h>

#include "signlap/analysis.hpp"
#include "signlap/error.hpp"
#include "signlap/random_graph.hpp"

using namespace signlap;

namespace {

// Corpus of graphs with n fixed to the benchmark argument.
std::vector<SignedGraph> graphs_of_size(std::size_t n) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = n;
  return random_corpus(7, 64, spec);
}

void BM_Certify(benchmark::State& state, Route route) {
  const auto graphs = graphs_of_size(static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& g = graphs[k++ % graphs.size()];
    try {
      benchmark::DoNotOptimize(certify(g, route));
    } catch (const Error&) {
      // Route not applicable to this instance.
    }
  }
}

void BM_InertiaKron(benchmark::State& state) {
  const auto graphs = graphs_of_size(static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& g = graphs[k++ % graphs.size()];
    benchmark::DoNotOptimize(inertia_bounds(g));
    try {
      benchmark::DoNotOptimize(inertia_via_kron(g));
    } catch (const Error&) {
    }
  }
}

void BM_EventualPositivity(benchmark::State& state) {
  const auto graphs = graphs_of_size(static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eventual_positivity(graphs[k++ % graphs.size()]));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Certify, oracle, Route::Oracle)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Certify, kron, Route::Kron)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Certify, multiport, Route::MultiportZ)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Certify, split, Route::SplitY)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Certify, sequential, Route::Sequential)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_InertiaKron)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_EventualPositivity)->RangeMultiplier(2)->Range(4, 16);
