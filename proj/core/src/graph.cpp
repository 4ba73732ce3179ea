#include "signlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "signlap/error.hpp"

namespace signlap {

namespace {

std::string describe(std::size_t k, std::size_t i, std::size_t j, double w) {
  return "edge #" + std::to_string(k + 1) + " (" + std::to_string(i) + ", " + std::to_string(j) +
         ", " + std::to_string(w) + ")";
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

SignedGraph::SignedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    Edge& e = edges_[k];
    const auto desc = describe(k, e.u + 1, e.v + 1, e.weight);
    if (e.u >= n_ || e.v >= n_) throw Error(ErrorCode::IndexOutOfRange, desc);
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, desc);
    if (!std::isfinite(e.weight)) throw Error(ErrorCode::NonFinite, desc);
    if (e.weight == 0.0) throw Error(ErrorCode::ZeroWeight, desc);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) throw Error(ErrorCode::DuplicateEdge, desc);
  }
}

std::size_t SignedGraph::negative_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight < 0.0; }));
}

SignedGraph SignedGraph::with_weight(std::size_t k, double weight) const {
  auto edges = edges_;
  edges.at(k).weight = weight;
  return SignedGraph(n_, std::move(edges));
}

SignedGraph build_graph(std::size_t n, std::span<const EdgeInput> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (e.i < 1 || e.j < 1 || e.i > n || e.j > n) {
      throw Error(ErrorCode::IndexOutOfRange, describe(k, e.i, e.j, e.weight) +
                                                  " with n = " + std::to_string(n));
    }
    out.push_back({e.i - 1, e.j - 1, e.weight});
  }
  return SignedGraph(n, std::move(out));
}

SymmetricMatrix laplacian(const SignedGraph& g) {
  const std::size_t n = g.node_count();
  Matrix l = Matrix::Zero(ix(n), ix(n));
  for (const Edge& e : g.edges()) {
    l(ix(e.u), ix(e.v)) = -e.weight;
    l(ix(e.v), ix(e.u)) = -e.weight;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s += l(ix(i), ix(j));
    }
    l(ix(i), ix(i)) = -s;
  }
  return SymmetricMatrix(l);
}

Vector incidence_column(std::size_t n, NodeId i, NodeId j) {
  Vector d = Vector::Zero(ix(n));
  d(ix(i)) += 1.0;
  d(ix(j)) -= 1.0;
  return d;
}

IncidenceFactorization incidence(const SignedGraph& g) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  IncidenceFactorization f{Matrix::Zero(ix(n), ix(m)), Vector::Zero(ix(m))};
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = g.edge(k);
    f.incidence(ix(e.u), ix(k)) = 1.0;
    f.incidence(ix(e.v), ix(k)) = -1.0;
    f.weights(ix(k)) = e.weight;
  }
  return f;
}

SignSplit split_by_sign(const SignedGraph& g) {
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  SignSplit s;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    if (e.weight > 0.0) {
      pos.push_back(e);
      s.positive_parent.push_back(k);
    } else {
      neg.push_back(e);
      s.negative_parent.push_back(k);
    }
  }
  s.positive = SignedGraph(g.node_count(), std::move(pos));
  s.negative = SignedGraph(g.node_count(), std::move(neg));
  return s;
}

Components connected_components(const SignedGraph& g) {
  const std::size_t n = g.node_count();
  UnionFind uf(n);
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  Components c;
  c.label.assign(n, 0);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == n) root_label[r] = c.count++;
    c.label[i] = root_label[r];
  }
  return c;
}

bool is_connected(const SignedGraph& g) { return connected_components(g).count <= 1; }

SpanningForest spanning_forest(const SignedGraph& g) {
  UnionFind uf(g.node_count());
  SpanningForest f;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (uf.unite(g.edge(k).u, g.edge(k).v)) f.edges.push_back(k);
  }
  return f;
}

Vector opposing_shift(const SignedGraph& g) {
  Vector neg_sum = Vector::Zero(ix(g.node_count()));
  for (const Edge& e : g.edges()) {
    const double m = std::min(e.weight, 0.0);
    neg_sum(ix(e.u)) += m;
    neg_sum(ix(e.v)) += m;
  }
  return 2.0 * neg_sum.cwiseAbs();
}

SymmetricMatrix opposing_laplacian(const SignedGraph& g) {
  const std::size_t n = g.node_count();
  Matrix l = Matrix::Zero(ix(n), ix(n));
  for (const Edge& e : g.edges()) {
    l(ix(e.u), ix(e.v)) = -e.weight;
    l(ix(e.v), ix(e.u)) = -e.weight;
    l(ix(e.u), ix(e.u)) += std::abs(e.weight);
    l(ix(e.v), ix(e.v)) += std::abs(e.weight);
  }
  return SymmetricMatrix(l);
}

std::vector<std::size_t> edge_blocks(const SignedGraph& g) {
  // Iterative Hopcroft-Tarjan over an edge stack.
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < m; ++k) {
    adj[g.edge(k).u].push_back({g.edge(k).v, k});
    adj[g.edge(k).v].push_back({g.edge(k).u, k});
  }
  std::vector<std::size_t> disc(n, kNone);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> block(m, kNone);
  std::vector<std::size_t> edge_stack;
  std::size_t timer = 0;
  std::size_t next_block = 0;

  struct Frame {
    NodeId node;
    std::size_t parent_edge;
    std::size_t next;
  };
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.node].size()) {
        const auto [w, k] = adj[f.node][f.next++];
        if (k == f.parent_edge) continue;
        if (disc[w] == kNone) {
          edge_stack.push_back(k);
          disc[w] = low[w] = timer++;
          stack.push_back({w, k, 0});
        } else if (disc[w] < disc[f.node]) {
          edge_stack.push_back(k);
          low[f.node] = std::min(low[f.node], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& parent = stack.back();
      low[parent.node] = std::min(low[parent.node], low[done.node]);
      if (low[done.node] >= disc[parent.node]) {
        while (!edge_stack.empty()) {
          const std::size_t k = edge_stack.back();
          edge_stack.pop_back();
          block[k] = next_block;
          if (k == done.parent_edge) break;
        }
        ++next_block;
      }
    }
  }
  return block;
}

}  // namespace signlap
