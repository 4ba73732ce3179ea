#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace signlap {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense symmetric matrix. The upper triangle of the input is authoritative;
/// the lower triangle is mirrored from it so symmetry holds exactly.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(const Matrix& m);

  static SymmetricMatrix zeros(std::size_t order);
  static SymmetricMatrix identity(std::size_t order);
  static SymmetricMatrix diagonal(const Vector& d);

  std::size_t order() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& dense() const noexcept { return data_; }

  /// Principal submatrix on `idx` (in the given order).
  SymmetricMatrix principal(std::span<const std::size_t> idx) const;

  /// Max-abs entry.
  double max_abs() const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a);
  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.data_ == b.data_;
  }

 private:
  Matrix data_;
};

struct EigenDecomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // columns, orthonormal
};

struct Inertia {
  std::size_t minus = 0;
  std::size_t zero = 0;
  std::size_t plus = 0;

  std::size_t order() const noexcept { return minus + zero + plus; }
  friend Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.minus + b.minus, a.zero + b.zero, a.plus + b.plus};
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Zero-eigenvalue classification policy shared by every module.
///
/// An eigenvalue is treated as zero when |lambda| <= tau, with
/// tau = max(abs_floor, rel_zero * max|lambda|). Spectra with an eigenvalue
/// inside (tau/10, 10*tau] are "near threshold".
struct TolerancePolicy {
  double rel_zero = 1e-9;
  double abs_floor = 1e-12;

  /// Throws InvalidTolerance unless both fields are finite and positive.
  void validate() const;
  double threshold(double max_abs_eigenvalue) const;
  double threshold(const Vector& eigenvalues) const;
};

/// Spectrum classified against a TolerancePolicy.
struct SpectrumClass {
  Inertia inertia;
  double tau = 0.0;
  bool near_threshold = false;
  /// Number of eigenvalues with |lambda| < 10*tau (zeros plus near-zeros).
  std::size_t near_zero_count = 0;
};

/// Symmetric eigendecomposition with ascending eigenvalues. Deterministic for a
/// fixed input. Throws NonFinite on NaN/Inf entries.
EigenDecomposition eigh(const SymmetricMatrix& s);

SpectrumClass classify_spectrum(const Vector& eigenvalues, const TolerancePolicy& tol);
/// Same classification with an explicit zero threshold.
SpectrumClass classify_spectrum_at(const Vector& eigenvalues, double tau);

/// Spectral Moore-Penrose pseudoinverse.
SymmetricMatrix pinv(const SymmetricMatrix& s, const TolerancePolicy& tol = {});
SymmetricMatrix pinv(const EigenDecomposition& eig, const TolerancePolicy& tol = {});

Inertia inertia(const SymmetricMatrix& s, const TolerancePolicy& tol = {});
Inertia inertia_of(const Vector& eigenvalues, const TolerancePolicy& tol = {});

/// Generalized Schur complement S_kk - S_kd * pinv(S_dd) * S_dk, where d is the
/// complement of `keep`. Rows and columns of the result follow the order of
/// `keep`. Throws EmptyBlock when keep is empty or covers every index.
SymmetricMatrix schur_complement(const SymmetricMatrix& s, std::span<const std::size_t> keep,
                                 const TolerancePolicy& tol = {});

/// Indices of [0, n) not in `idx`, ascending.
std::vector<std::size_t> complement_indices(std::size_t n, std::span<const std::size_t> idx);

/// Dense block S(rows, cols).
Matrix block(const Matrix& s, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// f(S) = V diag(f(lambda)) V' evaluated spectrally.
template <class F>
Matrix spectral_function(const EigenDecomposition& eig, F&& f) {
  Vector fl = eig.eigenvalues.unaryExpr(std::forward<F>(f));
  return eig.eigenvectors * fl.asDiagonal() * eig.eigenvectors.transpose();
}

}  // namespace signlap
