#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "signlap/numerics.hpp"

namespace signlap {

/// Node index, 0-based. File formats and user-facing messages are 1-based.
using NodeId = std::size_t;

/// Undirected weighted edge. `u < v` always; `u` is the head (+1 in the
/// incidence column) and `v` the tail (-1).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;
};

/// Edge as given by a user: 1-based endpoints in any order.
struct EdgeInput {
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.0;
};

/// Immutable undirected signed graph. Edge order is the insertion order and
/// defines the edge indices used everywhere else.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validating constructor over 0-based edges. Throws SelfLoop, ZeroWeight,
  /// IndexOutOfRange, NonFinite or DuplicateEdge naming the offending edge.
  SignedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  std::size_t negative_edge_count() const noexcept;
  bool has_negative_edges() const noexcept { return negative_edge_count() > 0; }

  /// Same topology with edge k's weight replaced.
  SignedGraph with_weight(std::size_t k, double weight) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a graph from 1-based edge triples (input order preserved).
SignedGraph build_graph(std::size_t n, std::span<const EdgeInput> edges);

struct IncidenceFactorization {
  Matrix incidence;  // n x m, column k = e_u - e_v
  Vector weights;    // diagonal of W
};

/// Edges partitioned by sign. Both parts span all n nodes.
struct SignSplit {
  SignedGraph positive;
  SignedGraph negative;
  std::vector<std::size_t> positive_parent;  // parent edge index per positive edge
  std::vector<std::size_t> negative_parent;
};

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;  // per node, labels 0..count-1 in order of first appearance
};

/// Spanning forest of a graph, as indices into that graph's edge list.
struct SpanningForest {
  std::vector<std::size_t> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Signed Laplacian: l_ij = -a_ij, l_ii = -sum_{j != i} l_ij.
SymmetricMatrix laplacian(const SignedGraph& g);

/// D and W with D W D' = laplacian(g), head = smaller node index.
IncidenceFactorization incidence(const SignedGraph& g);

/// Column d_ij = e_i - e_j of length n.
Vector incidence_column(std::size_t n, NodeId i, NodeId j);

SignSplit split_by_sign(const SignedGraph& g);

Components connected_components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

/// Greedy cycle-rejecting forest over ascending edge index.
SpanningForest spanning_forest(const SignedGraph& g);

/// Opposing Laplacian: off-diagonal -a_ij, diagonal sum_j |a_ij|.
SymmetricMatrix opposing_laplacian(const SignedGraph& g);

/// Diagonal of H = opposing_laplacian(g) - laplacian(g), h_ii = 2 |sum_j min(a_ij, 0)|.
Vector opposing_shift(const SignedGraph& g);

/// Biconnected-block label per edge (edges share a label iff they lie on a
/// common simple cycle or are the same bridge block).
std::vector<std::size_t> edge_blocks(const SignedGraph& g);

}  // namespace signlap
