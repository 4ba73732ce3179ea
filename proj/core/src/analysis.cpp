#include "signlap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "signlap/error.hpp"
#include "signlap/multiport.hpp"
#include "signlap/reduction.hpp"

namespace signlap {

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::PsdCorank1 ? "PSD_CORANK1" : "NOT_PSD_CORANK1";
}

std::string_view to_string(Route r) noexcept {
  switch (r) {
    case Route::Kron: return "KRON";
    case Route::MultiportZ: return "MULTIPORT_Z";
    case Route::SplitY: return "SPLIT_Y";
    case Route::CycleFree: return "CYCLE_FREE";
    case Route::Sequential: return "SEQUENTIAL";
    case Route::Oracle: return "ORACLE";
  }
  return "UNKNOWN";
}

namespace {

// Decides "PSD with exactly `expected_zeros` zero eigenvalues" for a decisive
// matrix. `scale` enlarges the reference magnitude for the zero threshold when
// the matrix is a difference of larger terms. `structural_zeros` counts zeros
// forced by topology (one per component); only near-zeros beyond both counts
// make the certificate marginal.
Certificate decide(Route route, SymmetricMatrix decisive, std::size_t expected_zeros,
                   const TolerancePolicy& tol, double scale = 0.0, std::size_t structural_zeros = 0) {
  Certificate c;
  c.route = route;
  const auto eig = eigh(decisive);
  const double ref = std::max(scale, eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0);
  const SpectrumClass sc = classify_spectrum_at(eig.eigenvalues, tol.threshold(ref));
  c.witness.decisive_inertia = sc.inertia;
  c.witness.expected_zeros = expected_zeros;
  c.marginal = sc.near_threshold || sc.near_zero_count > std::max(expected_zeros, structural_zeros);
  if (eig.eigenvalues.size() > 0) c.margin = eig.eigenvalues(0);

  const bool ok = sc.inertia.minus == 0 && sc.inertia.zero == expected_zeros;
  c.verdict = ok ? Verdict::PsdCorank1 : Verdict::NotPsdCorank1;
  if (!ok) {
    Eigen::Index k = 0;
    if (sc.inertia.minus > 0) {
      c.reason = "decisive matrix has " + std::to_string(sc.inertia.minus) + " negative eigenvalue(s)";
    } else {
      k = static_cast<Eigen::Index>(std::min<std::size_t>(expected_zeros, eig.eigenvalues.size() - 1));
      c.reason = "decisive matrix has " + std::to_string(sc.inertia.zero) + " zero eigenvalue(s), expected " +
                 std::to_string(expected_zeros);
    }
    if (eig.eigenvalues.size() > 0) {
      c.witness.violating_eigenvalue = eig.eigenvalues(k);
      c.witness.violating_vector = eig.eigenvectors.col(k);
    }
  }
  c.witness.decisive = std::move(decisive);
  return c;
}

// Scalar test value > 0 against a threshold taken relative to `scale`.
struct ScalarTest {
  bool positive = false;
  bool marginal = false;
};

ScalarTest scalar_test(double value, double scale, const TolerancePolicy& tol) {
  const double tau = tol.threshold(std::max(std::abs(value), scale));
  return {value > tau, std::abs(value) <= 10.0 * tau};
}

Certificate all_positive_path(const SignedGraph& g, Route route) {
  Certificate c;
  c.route = route;
  const bool connected = is_connected(g);
  c.verdict = connected ? Verdict::PsdCorank1 : Verdict::NotPsdCorank1;
  c.reason = connected ? "no negative edges and the graph is connected"
                       : "no negative edges and the graph is disconnected (corank equals component count)";
  return c;
}

Certificate positive_part_disconnected(Route route) {
  Certificate c;
  c.route = route;
  c.verdict = Verdict::NotPsdCorank1;
  c.reason = "positive subgraph is disconnected";
  return c;
}

void require_connected(const SignedGraph& g) {
  const auto comps = connected_components(g);
  if (comps.count > 1) {
    throw Error(ErrorCode::DisconnectedGraph, "graph has " + std::to_string(comps.count) + " connected components");
  }
}

}  // namespace

Certificate certify_psd_oracle(const SignedGraph& g, const TolerancePolicy& tol) {
  return decide(Route::Oracle, laplacian(g), 1, tol, 0.0, connected_components(g).count);
}

Certificate certify_psd_kron(const SignedGraph& g, const TolerancePolicy& tol) {
  if (!g.has_negative_edges()) return all_positive_path(g, Route::Kron);
  const auto L = laplacian(g);
  const auto alpha = external_terminals(g);
  if (alpha.size() == g.node_count()) {
    auto c = decide(Route::Kron, L, 1, tol, 0.0, connected_components(g).count);
    c.reason = "no interior terminals; reduced Laplacian is L itself" + (c.reason.empty() ? "" : "; " + c.reason);
    return c;
  }
  const auto kron = kron_reduce(L, alpha, tol);
  if (kron.disconnected_input) {
    Certificate c;
    c.route = Route::Kron;
    c.verdict = Verdict::NotPsdCorank1;
    c.reason = "interior block L_bb is singular (disconnected input)";
    c.witness.decisive = kron.reduced;
    c.witness.decisive_inertia = inertia(kron.reduced, tol);
    c.witness.expected_zeros = 1;
    return c;
  }
  return decide(Route::Kron, kron.reduced, 1, tol, 0.0, connected_components(g).count);
}

Certificate certify_psd_multiport(const SignedGraph& g, const TolerancePolicy& tol) {
  if (!g.has_negative_edges()) return all_positive_path(g, Route::MultiportZ);
  const auto split = split_by_sign(g);
  if (!is_connected(split.positive)) return positive_part_disconnected(Route::MultiportZ);
  const auto forest = spanning_forest(split.negative);
  std::vector<std::size_t> parent_edges;
  for (std::size_t k : forest.edges) parent_edges.push_back(split.negative_parent[k]);
  const auto pm = port_matrices(laplacian(g), PortSpec::from_edges(g, parent_edges), tol);
  if (pm.Z) return decide(Route::MultiportZ, *pm.Z, 0, tol);
  auto c = decide(Route::MultiportZ, pm.Y, 0, tol);
  c.verdict = Verdict::NotPsdCorank1;
  c.reason = "Z_F undefined: " + pm.z_undefined_reason + (c.reason.empty() ? "" : "; " + c.reason);
  return c;
}

Certificate certify_psd_split(const SignedGraph& g, const TolerancePolicy& tol) {
  if (!g.has_negative_edges()) return all_positive_path(g, Route::SplitY);
  const auto split = split_by_sign(g);
  if (!is_connected(split.positive)) return positive_part_disconnected(Route::SplitY);
  const auto forest = spanning_forest(split.negative);
  const auto [plus, minus] = split_port_matrices(split, forest, tol);
  const double scale = std::max(plus.Y.max_abs(), minus.Y.max_abs());
  auto c = decide(Route::SplitY, plus.Y + minus.Y, 0, tol, scale);
  if (plus.Z && minus.Z) {
    const auto zsum = SymmetricMatrix(-(minus.Z->dense() + plus.Z->dense()));
    c.z_margin = eigh(zsum).eigenvalues(0);
  }
  return c;
}

bool cycle_free_applicable(const SignedGraph& g) {
  const auto blocks = edge_blocks(g);
  std::vector<std::size_t> negatives_in_block(g.edge_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (g.edge(k).weight < 0.0 && ++negatives_in_block[blocks[k]] > 1) return false;
  }
  return true;
}

Certificate certify_psd_cycle_free(const SignedGraph& g, const TolerancePolicy& tol) {
  if (!g.has_negative_edges()) return all_positive_path(g, Route::CycleFree);
  if (!cycle_free_applicable(g)) {
    throw Error(ErrorCode::NotApplicable, "a cycle contains two or more negative edges");
  }
  const auto split = split_by_sign(g);
  if (!is_connected(split.positive)) return positive_part_disconnected(Route::CycleFree);

  const auto lp_pinv = pinv(laplacian(split.positive), tol);
  const std::size_t m = split.negative_parent.size();
  Vector y(static_cast<Eigen::Index>(m));
  Certificate c;
  c.route = Route::CycleFree;
  c.verdict = Verdict::PsdCorank1;
  c.witness.expected_zeros = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t parent = split.negative_parent[k];
    const Edge& e = g.edge(parent);
    const double r = transfer_from_pinv(lp_pinv, {e.u, e.v}, {e.u, e.v});
    const double conductance = 1.0 / r;
    y(static_cast<Eigen::Index>(k)) = conductance + e.weight;
    const auto t = scalar_test(conductance + e.weight, std::max(conductance, std::abs(e.weight)), tol);
    c.marginal = c.marginal || t.marginal;
    if (!t.positive && c.verdict == Verdict::PsdCorank1) {
      c.verdict = Verdict::NotPsdCorank1;
      c.witness.failing_edge = parent;
      c.witness.violating_eigenvalue = conductance + e.weight;
      c.reason = "negative edge (" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) +
                 "): |a| = " + std::to_string(-e.weight) + " >= 1/r+_eff = " + std::to_string(conductance);
    }
  }
  c.margin = y.minCoeff();
  c.witness.decisive = SymmetricMatrix::diagonal(y);
  c.witness.decisive_inertia = inertia_of(y, tol);
  return c;
}

Certificate certify_psd_sequential(const SignedGraph& g, const TolerancePolicy& tol,
                                   std::span<const std::size_t> order) {
  if (!g.has_negative_edges()) return all_positive_path(g, Route::Sequential);
  const auto split = split_by_sign(g);
  if (!is_connected(split.positive)) {
    throw Error(ErrorCode::PositivePartDisconnected, "sequential route starts from a connected positive subgraph");
  }
  std::vector<std::size_t> steps(order.begin(), order.end());
  if (steps.empty()) steps = split.negative_parent;
  {
    auto sorted = steps;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != split.negative_parent) {
      throw Error(ErrorCode::InvalidArgument, "order must be a permutation of the negative edge indices");
    }
  }

  Matrix current = laplacian(split.positive).dense();
  Certificate c;
  c.route = Route::Sequential;
  c.verdict = Verdict::PsdCorank1;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t parent : steps) {
    const Edge& e = g.edge(parent);
    const auto current_pinv = pinv(SymmetricMatrix(current), tol);
    const double r = transfer_from_pinv(current_pinv, {e.u, e.v}, {e.u, e.v});
    // |a| < 1/r  <=>  1 - |a| r > 0 when r > 0.
    const double conductance = r > 0.0 ? 1.0 / r : 0.0;
    const auto t = scalar_test(conductance + e.weight, std::max(conductance, std::abs(e.weight)), tol);
    c.marginal = c.marginal || t.marginal;
    worst = std::min(worst, conductance + e.weight);
    if (!(r > 0.0) || !t.positive) {
      c.verdict = Verdict::NotPsdCorank1;
      c.witness.failing_edge = parent;
      c.witness.violating_eigenvalue = conductance + e.weight;
      c.witness.decisive = SymmetricMatrix::diagonal(Vector::Constant(1, conductance + e.weight));
      c.reason = "adding negative edge (" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) +
                 ") fails |a| < 1/(d' L^dagger d): L is indefinite, has multiple zero eigenvalues, or both";
      break;
    }
    const Vector d = incidence_column(g.node_count(), e.u, e.v);
    current += e.weight * d * d.transpose();
  }
  c.margin = worst;
  return c;
}

Certificate certify(const SignedGraph& g, Route route, const TolerancePolicy& tol) {
  switch (route) {
    case Route::Kron: return certify_psd_kron(g, tol);
    case Route::MultiportZ: return certify_psd_multiport(g, tol);
    case Route::SplitY: return certify_psd_split(g, tol);
    case Route::CycleFree: return certify_psd_cycle_free(g, tol);
    case Route::Sequential: return certify_psd_sequential(g, tol);
    case Route::Oracle: return certify_psd_oracle(g, tol);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown route");
}

Inertia oracle_inertia(const SignedGraph& g, const TolerancePolicy& tol) { return inertia(laplacian(g), tol); }

InertiaReport inertia_via_kron(const SignedGraph& g, const TolerancePolicy& tol) {
  require_connected(g);
  const std::size_t n = g.node_count();
  InertiaReport r;
  if (!g.has_negative_edges()) {
    r.inertia = {0, 1, n - 1};
    r.offset = r.inertia;
    return r;
  }
  const auto L = laplacian(g);
  const auto alpha = external_terminals(g);
  if (alpha.size() == n) {
    r.decisive = L;
  } else {
    r.decisive = kron_reduce(L, alpha, tol).reduced;
    r.offset = {0, 0, n - alpha.size()};
  }
  const auto sc = classify_spectrum(eigh(r.decisive).eigenvalues, tol);
  r.decisive_inertia = sc.inertia;
  r.marginal = sc.near_threshold || sc.near_zero_count > 1;
  r.inertia = r.decisive_inertia + r.offset;
  return r;
}

InertiaReport inertia_via_conductance(const SignedGraph& g, const TolerancePolicy& tol) {
  require_connected(g);
  const std::size_t n = g.node_count();
  InertiaReport r;
  if (!g.has_negative_edges()) {
    r.inertia = {0, 1, n - 1};
    r.offset = r.inertia;
    return r;
  }
  const auto split = split_by_sign(g);
  const auto forest = spanning_forest(split.negative);
  std::vector<std::size_t> parent_edges;
  for (std::size_t k : forest.edges) parent_edges.push_back(split.negative_parent[k]);
  r.decisive = port_matrices(laplacian(g), PortSpec::from_edges(g, parent_edges), tol).Y;
  r.offset = {0, 1, n - 1 - forest.size()};
  const auto sc = classify_spectrum(eigh(r.decisive).eigenvalues, tol);
  r.decisive_inertia = sc.inertia;
  r.marginal = sc.near_threshold || sc.near_zero_count > 0;
  r.inertia = r.decisive_inertia + r.offset;
  return r;
}

InertiaBounds inertia_bounds(const SignedGraph& g) {
  const auto comps = connected_components(g);
  const auto split = split_by_sign(g);
  const auto plus_comps = connected_components(split.positive);
  const auto minus_comps = connected_components(split.negative);

  // Per component C of G: node count, c(G+ restricted to C), c(G- restricted to C).
  std::vector<std::size_t> nodes(comps.count, 0);
  std::vector<std::vector<bool>> seen_plus(comps.count, std::vector<bool>(plus_comps.count, false));
  std::vector<std::vector<bool>> seen_minus(comps.count, std::vector<bool>(minus_comps.count, false));
  std::vector<std::size_t> c_plus(comps.count, 0);
  std::vector<std::size_t> c_minus(comps.count, 0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::size_t c = comps.label[i];
    ++nodes[c];
    if (!seen_plus[c][plus_comps.label[i]]) {
      seen_plus[c][plus_comps.label[i]] = true;
      ++c_plus[c];
    }
    if (!seen_minus[c][minus_comps.label[i]]) {
      seen_minus[c][minus_comps.label[i]] = true;
      ++c_minus[c];
    }
  }

  InertiaBounds b;
  for (std::size_t c = 0; c < comps.count; ++c) {
    b.minus.lo += c_plus[c] - 1;
    b.minus.hi += nodes[c] - c_minus[c];
    b.plus.lo += c_minus[c] - 1;
    b.plus.hi += nodes[c] - c_plus[c];
    b.zero.lo += 1;
    b.zero.hi += nodes[c] + 2 - c_minus[c] - c_plus[c];
  }
  return b;
}

RegionResult negative_weight_region(const SignedGraph& templ, const RegionGrid& grid, const TolerancePolicy& tol) {
  if (templ.negative_edge_count() != 2) {
    throw Error(ErrorCode::WrongNegativeEdgeCount,
                "template needs exactly 2 negative edges, has " + std::to_string(templ.negative_edge_count()));
  }
  if (!(grid.a1_min < grid.a1_max && grid.a1_max < 0.0 && grid.a2_min < grid.a2_max && grid.a2_max < 0.0) ||
      grid.a1_count < 2 || grid.a2_count < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid must cover an interval of negative weights with >= 2 points per axis");
  }
  const auto split = split_by_sign(templ);
  if (!is_connected(split.positive)) {
    throw Error(ErrorCode::PositivePartDisconnected, "boundary matrix needs a connected positive subgraph");
  }
  RegionResult out;
  out.edge1 = split.negative_parent[0];
  out.edge2 = split.negative_parent[1];
  const std::vector<std::size_t> ports{out.edge1, out.edge2};
  // Two distinct edges always form a forest of G-.
  out.boundary = *port_matrices(laplacian(split.positive), PortSpec::from_edges(templ, ports), tol).Z;

  out.samples.reserve(grid.a1_count * grid.a2_count);
  for (std::size_t i = 0; i < grid.a1_count; ++i) {
    const double a1 = grid.a1_min + (grid.a1_max - grid.a1_min) * static_cast<double>(i) /
                                        static_cast<double>(grid.a1_count - 1);
    for (std::size_t j = 0; j < grid.a2_count; ++j) {
      const double a2 = grid.a2_min + (grid.a2_max - grid.a2_min) * static_cast<double>(j) /
                                          static_cast<double>(grid.a2_count - 1);
      Matrix m = -out.boundary.dense();
      m(0, 0) += -1.0 / a1;
      m(1, 1) += -1.0 / a2;
      const auto c = decide(Route::SplitY, SymmetricMatrix(m), 0, tol,
                            std::max({-1.0 / a1, -1.0 / a2, out.boundary.max_abs()}));
      out.samples.push_back({a1, a2, c.psd_corank1(), c.marginal});
    }
  }
  return out;
}

SignedGraph instantiate_region_sample(const SignedGraph& templ, const RegionResult& region, double a1, double a2) {
  return templ.with_weight(region.edge1, a1).with_weight(region.edge2, a2);
}

}  // namespace signlap
