#include "signlap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "signlap/error.hpp"

namespace signlap {

namespace {

constexpr double kStateRel = 1e-9;
constexpr double kBalanceRel = 1e-9;

Vector to_vector(std::span<const double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

void check_size(std::size_t got, std::size_t n, const char* what) {
  if (got != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has " + std::to_string(got) + " entries, graph has " + std::to_string(n) + " nodes");
  }
}

}  // namespace

Vector Trajectory::state_at(double t) const {
  const Vector c = spectrum.eigenvectors.transpose() * initial;
  const Vector scaled = c.cwiseProduct(spectrum.eigenvalues.unaryExpr([t](double l) { return std::exp(-l * t); }));
  return spectrum.eigenvectors * scaled;
}

Trajectory simulate_consensus(const SignedGraph& g, std::span<const double> x0, std::span<const double> times,
                              const TolerancePolicy& tol) {
  const std::size_t n = g.node_count();
  check_size(x0.size(), n, "initial state");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k]) || times[k] < 0.0 || (k > 0 && times[k] < times[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "sample times must be finite, nonnegative and ascending");
    }
  }
  Trajectory tr;
  tr.initial = to_vector(x0);
  if (!tr.initial.allFinite()) throw Error(ErrorCode::NonFinite, "initial state has NaN or infinite entries");
  tr.spectrum = eigh(laplacian(g));
  tr.certificate = certify_psd_oracle(g, tol);
  tr.consensus_value = n == 0 ? 0.0 : tr.initial.sum() / static_cast<double>(n);
  tr.times.assign(times.begin(), times.end());
  tr.states.reserve(times.size());
  for (double t : times) tr.states.push_back(tr.state_at(t));
  return tr;
}

std::vector<OrthantExit> orthant_exit_events(const Trajectory& traj, const TolerancePolicy& tol) {
  tol.validate();
  const Vector& x0 = traj.initial;
  for (Eigen::Index i = 0; i < x0.size(); ++i) {
    if (x0(i) < 0.0) {
      throw Error(ErrorCode::NegativeInitialCondition,
                  "agent " + std::to_string(i + 1) + " starts at " + std::to_string(x0(i)));
    }
  }
  const double floor = kStateRel * (x0.size() ? x0.cwiseAbs().maxCoeff() : 0.0);
  auto below = [&](Eigen::Index i, double t) { return traj.state_at(t)(i) < -floor; };
  // Boundary between a time where `below` is `from` and one where it is not.
  auto refine = [&](Eigen::Index i, double lo, double hi, bool lo_below) {
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (below(i, mid) == lo_below ? lo : hi) = mid;
    }
    return hi;
  };

  std::vector<OrthantExit> events;
  const std::size_t samples = traj.times.size();
  for (Eigen::Index i = 0; i < x0.size(); ++i) {
    std::optional<OrthantExit> open;
    for (std::size_t k = 0; k < samples; ++k) {
      const double v = traj.states[k](i);
      const bool neg = v < -floor;
      if (neg && !open) {
        OrthantExit e;
        e.agent = static_cast<NodeId>(i);
        e.exit_time = k == 0 ? traj.times[0] : refine(i, traj.times[k - 1], traj.times[k], false);
        e.minimum = v;
        open = e;
      } else if (neg) {
        open->minimum = std::min(open->minimum, v);
      } else if (open) {
        open->return_time = refine(i, traj.times[k - 1], traj.times[k], true);
        events.push_back(*open);
        open.reset();
      }
    }
    if (open) events.push_back(*open);
  }
  std::sort(events.begin(), events.end(), [](const OrthantExit& a, const OrthantExit& b) {
    return a.exit_time != b.exit_time ? a.exit_time < b.exit_time : a.agent < b.agent;
  });
  return events;
}

PowerFlowCase dc_power_flow(const SignedGraph& g, std::span<const double> p, const TolerancePolicy& tol) {
  tol.validate();
  const std::size_t n = g.node_count();
  check_size(p.size(), n, "injection vector");
  PowerFlowCase pf;
  pf.injections = to_vector(p);
  if (!pf.injections.allFinite()) throw Error(ErrorCode::NonFinite, "injections have NaN or infinite entries");
  const double norm = pf.injections.norm();
  if (std::abs(pf.injections.sum()) > kBalanceRel * norm) {
    throw Error(ErrorCode::UnbalancedInjections,
                "injections sum to " + std::to_string(pf.injections.sum()) + ", not zero");
  }
  const SymmetricMatrix L = laplacian(g);
  const auto eig = eigh(L);
  const auto sc = classify_spectrum(eig.eigenvalues, tol);
  pf.inertia = sc.inertia;
  pf.angles = pinv(eig, tol).dense() * pf.injections;
  if (n > 0) pf.angles.array() -= pf.angles(static_cast<Eigen::Index>(n - 1));
  pf.residual = (L.dense() * pf.angles - pf.injections).norm();

  const bool indefinite = sc.inertia.minus > 0;
  const bool multiple = sc.inertia.zero > 1;
  pf.feasible = !indefinite && sc.inertia.zero == 1;
  if (indefinite && multiple) {
    pf.reason = "indefinite; multiple zero eigenvalues";
  } else if (indefinite) {
    pf.reason = "indefinite";
  } else if (multiple) {
    pf.reason = "multiple zero eigenvalues";
  }
  if (multiple) {
    pf.kernel_basis.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(sc.inertia.zero));
    Eigen::Index col = 0;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
      if (std::abs(eig.eigenvalues(k)) <= sc.tau) pf.kernel_basis.col(col++) = eig.eigenvectors.col(k);
    }
  }
  return pf;
}

EquilibriumScreen angle_stability_weights(std::span<const Line> lines, std::span<const double> voltages,
                                          std::span<const double> theta, const TolerancePolicy& tol) {
  const std::size_t n = voltages.size();
  check_size(theta.size(), n, "angle vector");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(voltages[i] > 0.0)) {
      throw Error(ErrorCode::NonpositiveVoltage,
                  "bus " + std::to_string(i + 1) + " has voltage magnitude " + std::to_string(voltages[i]));
    }
  }
  EquilibriumScreen out;
  std::vector<EdgeInput> edges;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& ln = lines[k];
    if (ln.i < 1 || ln.i > n || ln.j < 1 || ln.j > n) {
      throw Error(ErrorCode::IndexOutOfRange, "line #" + std::to_string(k + 1) + " (" + std::to_string(ln.i) + ", " +
                                                  std::to_string(ln.j) + ") outside " + std::to_string(n) + " buses");
    }
    const double w = voltages[ln.i - 1] * voltages[ln.j - 1] * ln.susceptance *
                     std::cos(theta[ln.i - 1] - theta[ln.j - 1]);
    out.weights.push_back(w);
    if (w == 0.0) {
      out.dropped_lines.push_back(k);
      out.warnings.push_back("line #" + std::to_string(k + 1) + " (" + std::to_string(ln.i) + ", " +
                             std::to_string(ln.j) + ") has zero weight and was dropped");
      continue;
    }
    edges.push_back({ln.i, ln.j, w});
  }
  out.graph = build_graph(n, edges);
  const auto cert = certify_psd_oracle(out.graph, tol);
  out.stable = cert.psd_corank1();
  out.inertia = oracle_inertia(out.graph, tol);
  out.type_index = out.inertia.minus;
  if (cert.marginal) out.warnings.push_back("spectrum is near the zero threshold");
  return out;
}

}  // namespace signlap
