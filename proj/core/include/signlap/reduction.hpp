#pragma once

#include <span>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/numerics.hpp"

namespace signlap {

/// Kron reduction of a network onto the external terminals `alpha`.
struct KronResult {
  std::vector<NodeId> alpha;  // external terminals, original numbering, as given
  std::vector<NodeId> beta;   // interior terminals, ascending
  SymmetricMatrix reduced;    // L_r, rows/columns in `alpha` order
  SignedGraph reduced_graph;  // node k corresponds to alpha[k]
  /// L_bb was singular, so L_r used its pseudoinverse (happens only for
  /// disconnected inputs).
  bool disconnected_input = false;
};

/// Nodes incident to at least one negative edge, ascending. Throws NoNegativeEdges.
std::vector<NodeId> external_terminals(const SignedGraph& g);

/// L_r = L_aa - L_ab L_bb^dagger L_ba. Throws AlphaTooSmall (|alpha| < 2) or
/// AlphaNotProper (alpha covers every node, or repeats/out-of-range indices).
KronResult kron_reduce(const SymmetricMatrix& L, std::span<const NodeId> alpha,
                       const TolerancePolicy& tol = {});

/// Reads a signed graph off a Laplacian-like matrix: an edge for every
/// off-diagonal entry with |l_ij| > tau, weight -l_ij.
SignedGraph graph_from_laplacian(const SymmetricMatrix& L, const TolerancePolicy& tol = {});

}  // namespace signlap
