#pragma once

#include <cstdint>
#include <vector>

#include "signlap/graph.hpp"

namespace signlap {

/// Parameter ranges for random signed graphs. Each instance draws n, the edge
/// density and the negative fraction uniformly from these ranges.
struct RandomGraphSpec {
  std::size_t n_min = 3;
  std::size_t n_max = 12;
  double density_min = 0.3;
  double density_max = 0.9;
  double negative_fraction_min = 0.1;
  double negative_fraction_max = 0.5;
  double positive_weight_min = 0.5;
  double positive_weight_max = 2.0;
  double negative_magnitude_min = 0.05;  // sampled log-uniformly
  double negative_magnitude_max = 5.0;
};

/// Instance `index` of the corpus named by `seed`. Instances are independent:
/// each has its own generator seeded from (seed, index). Every instance has at
/// least one edge and at least one negative edge.
SignedGraph random_signed_graph(std::uint64_t seed, std::uint64_t index, const RandomGraphSpec& spec = {});

std::vector<SignedGraph> random_corpus(std::uint64_t seed, std::size_t count, const RandomGraphSpec& spec = {});

}  // namespace signlap
