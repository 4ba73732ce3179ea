#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/numerics.hpp"

namespace signlap {

/// Terminal pair of a port; current enters at `s` and leaves at `t`.
struct Port {
  NodeId s = 0;
  NodeId t = 0;
};

/// Ordered set of ports over an n-node network. Ports may share terminals but
/// must be distinct as unordered pairs.
class PortSpec {
 public:
  PortSpec() = default;
  PortSpec(std::size_t n, std::vector<Port> ports);

  /// Ports on the given edges of `g`, oriented head -> tail.
  static PortSpec from_edges(const SignedGraph& g, std::span<const std::size_t> edge_indices);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return ports_.size(); }
  std::span<const Port> ports() const noexcept { return ports_; }

  /// n x size() matrix whose columns are d_st.
  Matrix incidence() const;

 private:
  std::size_t n_ = 0;
  std::vector<Port> ports_;
};

/// Port resistance / conductance matrices. Y is always present; Z is absent
/// when port voltages are not determined by port currents.
struct PortMatrixPair {
  std::optional<SymmetricMatrix> Z;
  SymmetricMatrix Y;
  std::string z_undefined_reason;

  std::size_t size() const noexcept { return Y.order(); }
};

/// d_ij' L^dagger d_ij. May be zero or negative for signed networks.
double effective_resistance(const SymmetricMatrix& L, NodeId i, NodeId j, const TolerancePolicy& tol = {});

/// d_st' L^dagger d_ij.
double transfer_effective_resistance(const SymmetricMatrix& L, Port st, Port ij,
                                     const TolerancePolicy& tol = {});

/// Same as above from a precomputed L^dagger.
double transfer_from_pinv(const SymmetricMatrix& L_pinv, Port st, Port ij);

/// Z = Dp' L^dagger Dp, Y = Z^dagger. Z is marked undefined when some d_st is
/// not in range(L) (disconnected terminals, or extra kernel directions).
PortMatrixPair port_matrices(const SymmetricMatrix& L, const PortSpec& ports, const TolerancePolicy& tol = {});

/// Port matrices of the positive and negative parts on the forest ports.
/// `forest` indexes edges of `split.negative`. Throws EmptyForest.
std::pair<PortMatrixPair, PortMatrixPair> split_port_matrices(const SignSplit& split,
                                                              const SpanningForest& forest,
                                                              const TolerancePolicy& tol = {});

/// Leaves the `opened` ports open: Z' = Z_22, Y' = Y /_11.
PortMatrixPair open_circuit(const PortMatrixPair& pair, std::span<const std::size_t> opened,
                            const TolerancePolicy& tol = {});

/// Shorts the `shorted` ports: Y' = Y_22, Z' = Z /_11.
PortMatrixPair short_circuit(const PortMatrixPair& pair, std::span<const std::size_t> shorted,
                             const TolerancePolicy& tol = {});

struct ParallelConnection {
  SymmetricMatrix Y;  // Ya + Yb
  SymmetricMatrix Z;  // (Za^dagger + Zb^dagger)^dagger, i.e. Y^dagger
};

/// Parallel connection of two networks given by conductance matrices.
ParallelConnection parallel(const SymmetricMatrix& Ya, const SymmetricMatrix& Yb,
                            const TolerancePolicy& tol = {});

}  // namespace signlap
