#include "signlap/reduction.hpp"

#include <cmath>
#include <string>

#include "signlap/error.hpp"

namespace signlap {

std::vector<NodeId> external_terminals(const SignedGraph& g) {
  std::vector<bool> touched(g.node_count(), false);
  bool any = false;
  for (const Edge& e : g.edges()) {
    if (e.weight < 0.0) {
      touched[e.u] = touched[e.v] = true;
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::NoNegativeEdges, "graph has no negatively weighted edges");
  std::vector<NodeId> out;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (touched[i]) out.push_back(i);
  }
  return out;
}

SignedGraph graph_from_laplacian(const SymmetricMatrix& L, const TolerancePolicy& tol) {
  const double tau = tol.threshold(eigh(L).eigenvalues);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < L.order(); ++i) {
    for (std::size_t j = i + 1; j < L.order(); ++j) {
      if (std::abs(L(i, j)) > tau) edges.push_back({i, j, -L(i, j)});
    }
  }
  return SignedGraph(L.order(), std::move(edges));
}

KronResult kron_reduce(const SymmetricMatrix& L, std::span<const NodeId> alpha, const TolerancePolicy& tol) {
  const std::size_t n = L.order();
  if (alpha.size() < 2) {
    throw Error(ErrorCode::AlphaTooSmall, "need at least 2 external terminals, got " + std::to_string(alpha.size()));
  }
  std::vector<bool> in_alpha(n, false);
  for (NodeId a : alpha) {
    if (a >= n || in_alpha[a]) {
      throw Error(ErrorCode::AlphaNotProper, "terminal " + std::to_string(a + 1) + " out of range or repeated");
    }
    in_alpha[a] = true;
  }
  if (alpha.size() == n) {
    throw Error(ErrorCode::AlphaNotProper, "all " + std::to_string(n) + " nodes are external terminals");
  }

  KronResult r;
  r.alpha.assign(alpha.begin(), alpha.end());
  r.beta = complement_indices(n, alpha);
  const auto interior = eigh(L.principal(r.beta));
  r.disconnected_input = classify_spectrum(interior.eigenvalues, tol).inertia.zero > 0;

  const Matrix& m = L.dense();
  const Matrix l_ab = block(m, r.alpha, r.beta);
  r.reduced = SymmetricMatrix(block(m, r.alpha, r.alpha) - l_ab * pinv(interior, tol).dense() * l_ab.transpose());
  r.reduced_graph = graph_from_laplacian(r.reduced, tol);
  return r;
}

}  // namespace signlap
