#pragma once

#include <string>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/graph_io.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(SIGNLAP_DATA_DIR) + "/" + name; }

inline signlap::SignedGraph load(const std::string& name) { return signlap::read_edge_list_file(data(name)); }

/// Triangle with unit edges (1,2), (2,3) and weight a on (1,3).
inline signlap::SignedGraph k3(double a) {
  const std::vector<signlap::EdgeInput> e{{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, a}};
  return signlap::build_graph(3, e);
}

inline signlap::SignedGraph path(std::size_t n, double w = 1.0) {
  std::vector<signlap::EdgeInput> e;
  for (std::size_t i = 1; i < n; ++i) e.push_back({i, i + 1, w});
  return signlap::build_graph(n, e);
}

}  // namespace fixtures
