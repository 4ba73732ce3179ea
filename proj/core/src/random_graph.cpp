#include "signlap/random_graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "signlap/error.hpp"

namespace signlap {

SignedGraph random_signed_graph(std::uint64_t seed, std::uint64_t index, const RandomGraphSpec& spec) {
  if (spec.n_min < 2 || spec.n_max < spec.n_min) {
    throw Error(ErrorCode::InvalidArgument, "random graph node range must satisfy 2 <= n_min <= n_max");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  const std::size_t n = std::uniform_int_distribution<std::size_t>(spec.n_min, spec.n_max)(rng);
  const double density = uniform(spec.density_min, spec.density_max);
  const double fraction = uniform(spec.negative_fraction_min, spec.negative_fraction_max);

  std::vector<Edge> edges;
  while (edges.empty()) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (unit(rng) < density) edges.push_back({u, v, 0.0});
      }
    }
  }
  const std::size_t m = edges.size();
  const std::size_t negatives =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::lround(fraction * static_cast<double>(m))), 1, m);
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < m; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  const double log_lo = std::log(spec.negative_magnitude_min), log_hi = std::log(spec.negative_magnitude_max);
  for (std::size_t r = 0; r < m; ++r) {
    Edge& e = edges[order[r]];
    e.weight = r < negatives ? -std::exp(uniform(log_lo, log_hi))
                             : uniform(spec.positive_weight_min, spec.positive_weight_max);
  }
  return SignedGraph(n, std::move(edges));
}

std::vector<SignedGraph> random_corpus(std::uint64_t seed, std::size_t count, const RandomGraphSpec& spec) {
  std::vector<SignedGraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_signed_graph(seed, k, spec));
  return out;
}

}  // namespace signlap
