#include "signlap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "signlap/error.hpp"

namespace signlap {

namespace {

Eigen::Index as_index(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

SymmetricMatrix::SymmetricMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "symmetric matrix must be square, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  data_ = m.triangularView<Eigen::Upper>();
  data_.triangularView<Eigen::StrictlyLower>() = m.transpose().triangularView<Eigen::StrictlyLower>();
}

SymmetricMatrix SymmetricMatrix::zeros(std::size_t order) {
  return SymmetricMatrix(Matrix::Zero(as_index(order), as_index(order)));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t order) {
  return SymmetricMatrix(Matrix::Identity(as_index(order), as_index(order)));
}

SymmetricMatrix SymmetricMatrix::diagonal(const Vector& d) {
  return SymmetricMatrix(Matrix(d.asDiagonal()));
}

SymmetricMatrix SymmetricMatrix::principal(std::span<const std::size_t> idx) const {
  return SymmetricMatrix(block(data_, idx, idx));
}

double SymmetricMatrix::max_abs() const {
  return data_.size() == 0 ? 0.0 : data_.cwiseAbs().maxCoeff();
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot add matrices of order " +
                                                  std::to_string(a.order()) + " and " +
                                                  std::to_string(b.order()));
  }
  return SymmetricMatrix(a.data_ + b.data_);
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot subtract matrices of order " +
                                                  std::to_string(a.order()) + " and " +
                                                  std::to_string(b.order()));
  }
  return SymmetricMatrix(a.data_ - b.data_);
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) { return SymmetricMatrix(s * a.data_); }

void TolerancePolicy::validate() const {
  if (!(std::isfinite(rel_zero) && rel_zero > 0.0) || !(std::isfinite(abs_floor) && abs_floor > 0.0)) {
    throw Error(ErrorCode::InvalidTolerance, "rel_zero and abs_floor must be finite and positive");
  }
}

double TolerancePolicy::threshold(double max_abs_eigenvalue) const {
  return std::max(abs_floor, rel_zero * max_abs_eigenvalue);
}

double TolerancePolicy::threshold(const Vector& eigenvalues) const {
  return threshold(eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff());
}

EigenDecomposition eigh(const SymmetricMatrix& s) {
  const Matrix& m = s.dense();
  if (!m.allFinite()) {
    throw Error(ErrorCode::NonFinite, "matrix has NaN or infinite entries");
  }
  if (m.size() == 0) {
    return {Vector(0), Matrix(0, 0)};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonFinite, "symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectrumClass classify_spectrum(const Vector& eigenvalues, const TolerancePolicy& tol) {
  return classify_spectrum_at(eigenvalues, tol.threshold(eigenvalues));
}

SpectrumClass classify_spectrum_at(const Vector& eigenvalues, double tau) {
  SpectrumClass out;
  out.tau = tau;
  for (double lambda : eigenvalues) {
    const double a = std::abs(lambda);
    if (a <= out.tau) {
      ++out.inertia.zero;
    } else if (lambda < 0.0) {
      ++out.inertia.minus;
    } else {
      ++out.inertia.plus;
    }
    if (a > out.tau / 10.0 && a <= 10.0 * out.tau) out.near_threshold = true;
    if (a < 10.0 * out.tau) ++out.near_zero_count;
  }
  return out;
}

SymmetricMatrix pinv(const EigenDecomposition& eig, const TolerancePolicy& tol) {
  const double tau = tol.threshold(eig.eigenvalues);
  return SymmetricMatrix(spectral_function(eig, [tau](double l) {
    return std::abs(l) <= tau ? 0.0 : 1.0 / l;
  }));
}

SymmetricMatrix pinv(const SymmetricMatrix& s, const TolerancePolicy& tol) { return pinv(eigh(s), tol); }

Inertia inertia_of(const Vector& eigenvalues, const TolerancePolicy& tol) {
  return classify_spectrum(eigenvalues, tol).inertia;
}

Inertia inertia(const SymmetricMatrix& s, const TolerancePolicy& tol) {
  return inertia_of(eigh(s).eigenvalues, tol);
}

std::vector<std::size_t> complement_indices(std::size_t n, std::span<const std::size_t> idx) {
  std::vector<bool> taken(n, false);
  for (std::size_t i : idx) {
    if (i >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside order " + std::to_string(n));
    }
    taken[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) out.push_back(i);
  }
  return out;
}

Matrix block(const Matrix& s, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  Matrix out(as_index(rows.size()), as_index(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(as_index(r), as_index(c)) = s(as_index(rows[r]), as_index(cols[c]));
    }
  }
  return out;
}

SymmetricMatrix schur_complement(const SymmetricMatrix& s, std::span<const std::size_t> keep,
                                 const TolerancePolicy& tol) {
  const std::size_t n = s.order();
  const auto drop = complement_indices(n, keep);
  if (keep.empty() || drop.empty()) {
    throw Error(ErrorCode::EmptyBlock, "schur complement needs a nonempty proper index set, got " +
                                           std::to_string(keep.size()) + " of " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t k : keep) {
    if (seen[k]) throw Error(ErrorCode::InvalidArgument, "repeated index " + std::to_string(k));
    seen[k] = true;
  }
  const Matrix& m = s.dense();
  const Matrix skk = block(m, keep, keep);
  const Matrix skd = block(m, keep, drop);
  const SymmetricMatrix sdd_pinv = pinv(SymmetricMatrix(block(m, drop, drop)), tol);
  return SymmetricMatrix(skk - skd * sdd_pinv.dense() * skd.transpose());
}

}  // namespace signlap
