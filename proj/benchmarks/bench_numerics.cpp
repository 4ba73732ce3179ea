#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "signlap/graph.hpp"
#include "signlap/random_graph.hpp"
#include "signlap/reduction.hpp"

using namespace signlap;

namespace {

SignedGraph graph_of_size(std::size_t n, std::uint64_t index = 0) {
  RandomGraphSpec spec;
  spec.n_min = spec.n_max = n;
  return random_signed_graph(11, index, spec);
}

void BM_Eigh(benchmark::State& state) {
  const auto L = laplacian(graph_of_size(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(L));
}

void BM_Pinv(benchmark::State& state) {
  const auto L = laplacian(graph_of_size(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pinv(L));
}

void BM_KronReduce(benchmark::State& state) {
  // First instance with at least one interior node.
  const auto n = static_cast<std::size_t>(state.range(0));
  SignedGraph g = graph_of_size(n);
  for (std::uint64_t k = 1; external_terminals(g).size() == n; ++k) g = graph_of_size(n, k);
  const auto L = laplacian(g);
  const auto alpha = external_terminals(g);
  for (auto _ : state) benchmark::DoNotOptimize(kron_reduce(L, alpha));
}

}  // namespace

BENCHMARK(BM_Eigh)->RangeMultiplier(2)->Range(4, 128);
BENCHMARK(BM_Pinv)->RangeMultiplier(2)->Range(4, 128);
BENCHMARK(BM_KronReduce)->RangeMultiplier(2)->Range(4, 128);
