#include <gtest/gtest.h>

#include "signlap/random_graph.hpp"

using namespace signlap;

TEST(RandomGraph, DeterministicPerSeedAndIndex) {
  const auto a = random_signed_graph(5, 17);
  const auto b = random_signed_graph(5, 17);
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (std::size_t k = 0; k < a.edge_count(); ++k) EXPECT_EQ(a.edge(k).weight, b.edge(k).weight);
  const auto c = random_signed_graph(6, 17);
  bool differs = c.edge_count() != a.edge_count() || c.node_count() != a.node_count();
  for (std::size_t k = 0; !differs && k < a.edge_count(); ++k) differs = a.edge(k).weight != c.edge(k).weight;
  EXPECT_TRUE(differs);
}

TEST(RandomGraph, RespectsRanges) {
  const RandomGraphSpec spec;
  for (const auto& g : random_corpus(9, 300)) {
    EXPECT_GE(g.node_count(), spec.n_min);
    EXPECT_LE(g.node_count(), spec.n_max);
    EXPECT_GE(g.negative_edge_count(), 1u);
    for (const auto& e : g.edges()) {
      if (e.weight > 0) {
        EXPECT_GE(e.weight, spec.positive_weight_min);
        EXPECT_LE(e.weight, spec.positive_weight_max);
      } else {
        EXPECT_GE(-e.weight, spec.negative_magnitude_min);
        EXPECT_LE(-e.weight, spec.negative_magnitude_max);
      }
    }
  }
}
