#include "signlap/multiport.hpp"

#include <cmath>
#include <set>
#include <string>

#include "signlap/error.hpp"

namespace signlap {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_pair(std::size_t n, NodeId i, NodeId j) {
  if (i >= n || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "node pair (" + std::to_string(i + 1) + ", " +
                                                std::to_string(j + 1) + ") outside order " +
                                                std::to_string(n));
  }
  if (i == j) throw Error(ErrorCode::InvalidPort, "port terminals must differ, got node " + std::to_string(i + 1));
}

// Port currents d_st must lie in range(L) for the port voltages to be a
// function of the port currents; otherwise some port sees infinite resistance.
bool ports_in_range(const EigenDecomposition& eig, const Matrix& d, const TolerancePolicy& tol) {
  constexpr double kRangeTol = 1e-6;
  const double tau = tol.threshold(eig.eigenvalues);
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (std::abs(eig.eigenvalues(k)) > tau) continue;
    if ((eig.eigenvectors.col(k).transpose() * d).cwiseAbs().maxCoeff() > kRangeTol) return false;
  }
  return true;
}

void check_port_subset(std::size_t ports, std::span<const std::size_t> subset, ErrorCode all_code) {
  std::set<std::size_t> s;
  for (std::size_t k : subset) {
    if (k >= ports) {
      throw Error(ErrorCode::IndexOutOfRange, "port index " + std::to_string(k) + " of " + std::to_string(ports));
    }
    if (!s.insert(k).second) throw Error(ErrorCode::InvalidArgument, "repeated port index " + std::to_string(k));
  }
  if (!subset.empty() && s.size() == ports) {
    throw Error(all_code, "cannot apply to all " + std::to_string(ports) + " ports");
  }
}

std::optional<SymmetricMatrix> invert_if_nonsingular(const SymmetricMatrix& m, const TolerancePolicy& tol) {
  const auto eig = eigh(m);
  if (classify_spectrum(eig.eigenvalues, tol).inertia.zero > 0) return std::nullopt;
  return pinv(eig, tol);
}

}  // namespace

PortSpec::PortSpec(std::size_t n, std::vector<Port> ports) : n_(n), ports_(std::move(ports)) {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Port& p : ports_) {
    check_pair(n_, p.s, p.t);
    if (!seen.emplace(std::min(p.s, p.t), std::max(p.s, p.t)).second) {
      throw Error(ErrorCode::InvalidPort, "duplicate port (" + std::to_string(p.s + 1) + ", " +
                                              std::to_string(p.t + 1) + ")");
    }
  }
}

PortSpec PortSpec::from_edges(const SignedGraph& g, std::span<const std::size_t> edge_indices) {
  std::vector<Port> ports;
  ports.reserve(edge_indices.size());
  for (std::size_t k : edge_indices) ports.push_back({g.edge(k).u, g.edge(k).v});
  return PortSpec(g.node_count(), std::move(ports));
}

Matrix PortSpec::incidence() const {
  Matrix d = Matrix::Zero(ix(n_), ix(ports_.size()));
  for (std::size_t k = 0; k < ports_.size(); ++k) {
    d(ix(ports_[k].s), ix(k)) = 1.0;
    d(ix(ports_[k].t), ix(k)) = -1.0;
  }
  return d;
}

double transfer_from_pinv(const SymmetricMatrix& L_pinv, Port st, Port ij) {
  const Matrix& p = L_pinv.dense();
  const auto s = ix(st.s), t = ix(st.t), i = ix(ij.s), j = ix(ij.t);
  return p(s, i) - p(s, j) - p(t, i) + p(t, j);
}

double transfer_effective_resistance(const SymmetricMatrix& L, Port st, Port ij, const TolerancePolicy& tol) {
  check_pair(L.order(), st.s, st.t);
  check_pair(L.order(), ij.s, ij.t);
  return transfer_from_pinv(pinv(L, tol), st, ij);
}

double effective_resistance(const SymmetricMatrix& L, NodeId i, NodeId j, const TolerancePolicy& tol) {
  return transfer_effective_resistance(L, {i, j}, {i, j}, tol);
}

PortMatrixPair port_matrices(const SymmetricMatrix& L, const PortSpec& ports, const TolerancePolicy& tol) {
  if (ports.node_count() != L.order()) {
    throw Error(ErrorCode::DimensionMismatch, "port spec over " + std::to_string(ports.node_count()) +
                                                  " nodes, Laplacian of order " + std::to_string(L.order()));
  }
  const auto eig = eigh(L);
  const Matrix d = ports.incidence();
  const SymmetricMatrix z(d.transpose() * pinv(eig, tol).dense() * d);
  PortMatrixPair out{std::nullopt, pinv(z, tol), {}};
  if (d.cols() > 0 && !ports_in_range(eig, d, tol)) {
    out.z_undefined_reason = "a port current is not in range(L); that port sees infinite resistance";
  } else {
    out.Z = z;
  }
  return out;
}

std::pair<PortMatrixPair, PortMatrixPair> split_port_matrices(const SignSplit& split,
                                                              const SpanningForest& forest,
                                                              const TolerancePolicy& tol) {
  if (forest.size() == 0) {
    throw Error(ErrorCode::EmptyForest, "negative part has no edges; use the all-positive path");
  }
  const PortSpec ports = PortSpec::from_edges(split.negative, forest.edges);
  return {port_matrices(laplacian(split.positive), ports, tol),
          port_matrices(laplacian(split.negative), ports, tol)};
}

PortMatrixPair open_circuit(const PortMatrixPair& pair, std::span<const std::size_t> opened,
                            const TolerancePolicy& tol) {
  check_port_subset(pair.size(), opened, ErrorCode::AllPortsOpened);
  if (opened.empty()) return pair;
  const auto remaining = complement_indices(pair.size(), opened);
  PortMatrixPair out{std::nullopt, schur_complement(pair.Y, remaining, tol), {}};
  if (pair.Z) {
    out.Z = pair.Z->principal(remaining);
  } else if (auto z = invert_if_nonsingular(out.Y, tol)) {
    out.Z = std::move(z);
  } else {
    out.z_undefined_reason = pair.z_undefined_reason;
  }
  return out;
}

PortMatrixPair short_circuit(const PortMatrixPair& pair, std::span<const std::size_t> shorted,
                             const TolerancePolicy& tol) {
  check_port_subset(pair.size(), shorted, ErrorCode::AllPortsShorted);
  if (shorted.empty()) return pair;
  const auto remaining = complement_indices(pair.size(), shorted);
  PortMatrixPair out{std::nullopt, pair.Y.principal(remaining), {}};
  if (pair.Z) {
    out.Z = schur_complement(*pair.Z, remaining, tol);
  } else if (auto z = invert_if_nonsingular(out.Y, tol)) {
    out.Z = std::move(z);
  } else {
    out.z_undefined_reason = pair.z_undefined_reason;
  }
  return out;
}

ParallelConnection parallel(const SymmetricMatrix& Ya, const SymmetricMatrix& Yb, const TolerancePolicy& tol) {
  if (Ya.order() != Yb.order()) {
    throw Error(ErrorCode::DimensionMismatch, "parallel connection of " + std::to_string(Ya.order()) +
                                                  "-port and " + std::to_string(Yb.order()) + "-port");
  }
  SymmetricMatrix y = Ya + Yb;
  SymmetricMatrix z = pinv(y, tol);
  return {std::move(y), std::move(z)};
}

}  // namespace signlap
