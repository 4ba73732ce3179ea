#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "signlap/analysis.hpp"
#include "signlap/error.hpp"

namespace signlap {

namespace {

constexpr double kEntryRel = 1e-12;

bool entrywise_positive(const Matrix& m) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !std::isfinite(scale)) return false;
  return (m.array() > kEntryRel * scale).all();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<double> default_time_grid() {
  std::vector<double> grid(61);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i) / 60.0);
  return grid;
}

EventualPositivityReport eventual_positivity(const SignedGraph& g, const TolerancePolicy& tol,
                                             const EventualPositivityOptions& opts) {
  tol.validate();
  const std::size_t n = g.node_count();
  EventualPositivityReport rep;
  rep.k_max = opts.k_max == 0 ? 64 * n : opts.k_max;
  if (n == 0) {
    rep.pf_check.failures.push_back("empty graph");
    return rep;
  }

  const auto eig = eigh(laplacian(g));
  const Vector& lam = eig.eigenvalues;
  const auto sc = classify_spectrum(lam, tol);
  const double tau = sc.tau;
  rep.marginal = sc.near_threshold || sc.near_zero_count > std::max<std::size_t>(1, connected_components(g).count);
  rep.shift = lam(lam.size() - 1);

  // Eigenvalues of B = sI - L are s - lambda_i, with the same eigenvectors.
  const Vector mu = Vector::Constant(lam.size(), rep.shift) - lam;
  auto& pf = rep.pf_check;
  pf.spectral_radius = mu.cwiseAbs().maxCoeff();
  const Eigen::Index top = 0;  // mu is descending because lam is ascending
  pf.radius_is_shift = std::abs(pf.spectral_radius - rep.shift) <= tau;
  if (!pf.radius_is_shift) {
    pf.failures.push_back("rho(B) = " + fmt_double(pf.spectral_radius) + " exceeds the shift s = " +
                          fmt_double(rep.shift) + " (L has a negative eigenvalue " + fmt_double(lam(0)) + ")");
  }
  std::size_t multiplicity = 0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (std::abs(mu(k) - mu(top)) <= tau) ++multiplicity;
  }
  pf.simple = multiplicity == 1;
  if (!pf.simple) {
    pf.failures.push_back("dominant eigenvalue of B has multiplicity " + std::to_string(multiplicity));
  }
  pf.strictly_dominant = true;
  for (Eigen::Index k = 1; k < mu.size(); ++k) {
    if (std::abs(mu(k)) >= pf.spectral_radius - tau) pf.strictly_dominant = false;
  }
  if (!pf.strictly_dominant) {
    pf.failures.push_back("another eigenvalue of B matches rho(B) in modulus");
  }
  Vector v = eig.eigenvectors.col(top);
  if (v.sum() < 0.0) v = -v;
  pf.positive_eigenvector = (v.array() > kEntryRel * v.cwiseAbs().maxCoeff()).all();
  if (!pf.positive_eigenvector) {
    pf.failures.push_back("eigenvector of rho(B) is not entrywise positive");
  }
  rep.is_eep = pf.passed();

  // Powers of B / rho(B); scaling does not change signs.
  if (pf.spectral_radius > 0.0) {
    const Matrix B = (Matrix(rep.shift * Matrix::Identity(lam.size(), lam.size())) -
                      laplacian(g).dense()) / pf.spectral_radius;
    Matrix P = B;
    std::optional<std::size_t> last_fail;
    for (std::size_t k = 1; k <= rep.k_max; ++k) {
      if (k > 1) P = P * B;
      if (!entrywise_positive(P)) last_fail = k;
      const double s = P.cwiseAbs().maxCoeff();
      if (s > 0.0 && std::isfinite(s)) P /= s;
    }
    const std::size_t first = last_fail ? *last_fail + 1 : 1;
    if (first <= rep.k_max) rep.k0 = first;
  }

  // exp(-L t) scaled by exp(lambda_min t) so nothing overflows.
  const double lmin = lam(0);
  auto positive_at = [&](double t) {
    return entrywise_positive(spectral_function(eig, [&](double l) { return std::exp(-(l - lmin) * t); }));
  };
  const std::vector<double> grid = opts.t_grid.empty() ? default_time_grid() : opts.t_grid;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1]) || grid[0] < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "time grid must be nonnegative and strictly ascending");
    }
  }
  std::optional<std::size_t> first_ok;
  for (std::size_t i = grid.size(); i-- > 0;) {
    if (!positive_at(grid[i])) break;
    first_ok = i;
  }
  if (first_ok) {
    if (*first_ok == 0) {
      rep.t0 = grid[0];
    } else {
      double lo = grid[*first_ok - 1], hi = grid[*first_ok];
      for (int it = 0; it < 80 && hi - lo > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (positive_at(mid) ? hi : lo) = mid;
      }
      rep.t0 = hi;
    }
  }
  return rep;
}

}  // namespace signlap
