#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/numerics.hpp"

namespace signlap {

enum class Verdict { PsdCorank1, NotPsdCorank1 };

/// How a certificate was obtained.
enum class Route { Kron, MultiportZ, SplitY, CycleFree, Sequential, Oracle };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Route r) noexcept;

/// Evidence behind a verdict. For a NOT verdict at least one of
/// `violating_eigenvalue` / `failing_edge` / `reason` names the violation.
struct Witness {
  std::optional<SymmetricMatrix> decisive;  // matrix whose inertia decided the verdict
  Inertia decisive_inertia;
  std::size_t expected_zeros = 0;           // zero count required for a positive verdict
  std::optional<double> violating_eigenvalue;
  std::optional<Vector> violating_vector;
  std::optional<std::size_t> failing_edge;  // index into the input graph's edge list
};

struct Certificate {
  Verdict verdict = Verdict::NotPsdCorank1;
  Route route = Route::Oracle;
  Witness witness;
  bool marginal = false;
  std::string reason;
  /// Smallest eigenvalue of the decisive matrix (Y-form margin for the split route).
  std::optional<double> margin;
  /// Split route only: smallest eigenvalue of -Z- - Z+.
  std::optional<double> z_margin;

  bool psd_corank1() const noexcept { return verdict == Verdict::PsdCorank1; }
};

/// Direct eigendecomposition of L: PSD with exactly one zero eigenvalue.
Certificate certify_psd_oracle(const SignedGraph& g, const TolerancePolicy& tol = {});

/// Reduced Laplacian over the external terminals must be PSD with corank 1.
Certificate certify_psd_kron(const SignedGraph& g, const TolerancePolicy& tol = {});

/// G+ connected and Z_F = D_F' L^dagger D_F positive definite, F a spanning
/// forest of G-.
Certificate certify_psd_multiport(const SignedGraph& g, const TolerancePolicy& tol = {});

/// G+ connected and Y+_F + Y-_F positive definite.
Certificate certify_psd_split(const SignedGraph& g, const TolerancePolicy& tol = {});

/// True when no simple cycle of g contains two or more negative edges.
bool cycle_free_applicable(const SignedGraph& g);

/// G+ connected and r+_eff(i, j) < 1/|a_ij| on every negative edge. Throws
/// NotApplicable when some cycle holds two or more negative edges.
Certificate certify_psd_cycle_free(const SignedGraph& g, const TolerancePolicy& tol = {});

/// Adds negative edges one at a time to G+, checking |a| < 1/(d' L_k^dagger d)
/// at each step. `order` lists negative-edge indices of g to add (default:
/// ascending). Throws PositivePartDisconnected.
Certificate certify_psd_sequential(const SignedGraph& g, const TolerancePolicy& tol = {},
                                   std::span<const std::size_t> order = {});

/// Runs the requested route.
Certificate certify(const SignedGraph& g, Route route, const TolerancePolicy& tol = {});

/// Inertia obtained through a reduced matrix plus a known offset.
struct InertiaReport {
  Inertia inertia;
  SymmetricMatrix decisive;  // L_r or Y_F; order 0 when no reduction was needed
  Inertia decisive_inertia;
  Inertia offset;
  bool marginal = false;
};

Inertia oracle_inertia(const SignedGraph& g, const TolerancePolicy& tol = {});

/// pi(L) = pi(L_r) + (0, 0, |beta|). Throws DisconnectedGraph.
InertiaReport inertia_via_kron(const SignedGraph& g, const TolerancePolicy& tol = {});

/// pi(L) = pi(Y_F) + (0, 1, n - 1 - m_F). Throws DisconnectedGraph.
InertiaReport inertia_via_conductance(const SignedGraph& g, const TolerancePolicy& tol = {});

struct IntervalCount {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool contains(std::size_t v) const noexcept { return lo <= v && v <= hi; }
};

struct InertiaBounds {
  IntervalCount minus;
  IntervalCount zero;
  IntervalCount plus;
  bool contains(const Inertia& in) const noexcept {
    return minus.contains(in.minus) && zero.contains(in.zero) && plus.contains(in.plus);
  }
};

/// Topological inertia bounds from the component counts of G+ and G-.
/// Disconnected graphs are bounded per connected component and summed.
InertiaBounds inertia_bounds(const SignedGraph& g);

/// Strong Perron-Frobenius check on B = s I - L, s = lambda_max(L).
struct PerronFrobeniusCheck {
  double spectral_radius = 0.0;  // rho(B)
  bool radius_is_shift = false;  // rho(B) == s, i.e. attained at lambda_min(L) = 0 side
  bool simple = false;           // dominant eigenvalue has multiplicity one
  bool strictly_dominant = false;
  bool positive_eigenvector = false;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

struct EventualPositivityOptions {
  std::size_t k_max = 0;        // 0: 64 * n
  std::vector<double> t_grid;   // empty: 61 geometric points over [1e-3, 1e3]
};

struct EventualPositivityReport {
  bool is_eep = false;
  double shift = 0.0;  // s
  /// Least k <= k_max from which every checked power B^j is entrywise positive.
  std::optional<std::size_t> k0;
  std::size_t k_max = 0;
  /// Least time from which exp(-L t) is entrywise positive on the grid,
  /// refined by bisection.
  std::optional<double> t0;
  PerronFrobeniusCheck pf_check;
  bool marginal = false;
};

std::vector<double> default_time_grid();

EventualPositivityReport eventual_positivity(const SignedGraph& g, const TolerancePolicy& tol = {},
                                             const EventualPositivityOptions& opts = {});

/// Sampling box over the negative quadrant of two edge weights.
struct RegionGrid {
  double a1_min = -10.0;
  double a1_max = -0.05;
  std::size_t a1_count = 60;
  double a2_min = -10.0;
  double a2_max = -0.05;
  std::size_t a2_count = 60;
};

struct RegionSample {
  double a1 = 0.0;
  double a2 = 0.0;
  bool admissible = false;
  bool marginal = false;
};

struct RegionResult {
  std::size_t edge1 = 0;  // negative edge indices in the template, ascending
  std::size_t edge2 = 0;
  SymmetricMatrix boundary;  // Z+ on the two negative-edge ports
  std::vector<RegionSample> samples;  // a1-major order
};

/// Rasterizes {(a1, a2) : diag(-1/a1, -1/a2) > Z+}. Throws
/// WrongNegativeEdgeCount unless the template has exactly two negative edges,
/// PositivePartDisconnected when G+ is disconnected.
RegionResult negative_weight_region(const SignedGraph& templ, const RegionGrid& grid = {},
                                    const TolerancePolicy& tol = {});

/// Template with the two negative edges set to (a1, a2).
SignedGraph instantiate_region_sample(const SignedGraph& templ, const RegionResult& region, double a1, double a2);

}  // namespace signlap
