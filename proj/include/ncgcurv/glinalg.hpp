#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace ncgcurv {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Matrix<Complex>;
using CVector = Vector<Complex>;
using RMatrix = Matrix<double>;

/// Relative rank cut-off: singular values below kDefaultRankTol * sigma_max are dropped.
inline constexpr double kDefaultRankTol = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object violates a structural invariant
/// (projection not idempotent, connection not compressed, ...).
class InvariantError : public std::runtime_error {
 public:
  InvariantError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

enum class Parity { even = 0, odd = 1 };

/// Degree of a product: parities add mod 2.
inline Parity operator*(Parity a, Parity b) {
  return (a == b) ? Parity::even : Parity::odd;
}

/// (-1)^{deg}
inline int koszul_sign(Parity p) { return p == Parity::even ? 1 : -1; }

struct GradedOperator {
  CMatrix mat;
  Parity degree = Parity::even;
};

/// Self-adjoint involution splitting a Hilbert space into even and odd parts.
class Grading {
 public:
  Grading() = default;
  explicit Grading(CMatrix mat) : mat_(std::move(mat)) {}

  static Grading diagonal(std::span<const int> signs);
  static Grading trivial(Index n) { return Grading(CMatrix::Identity(n, n)); }

  const CMatrix& matrix() const { return mat_; }
  Index size() const { return mat_.rows(); }

  /// ||g^2 - 1||_F
  double involution_residual() const;
  /// ||g^* - g||_F
  double adjoint_residual() const;
  /// ||g a g - (-1)^p a||_F
  double parity_residual(const CMatrix& a, Parity p) const;

 private:
  CMatrix mat_;
};

template <typename Derived>
Matrix<typename Derived::Scalar> adjoint(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> commutator(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  return a * b - b * a;
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> anticommutator(const Eigen::MatrixBase<DA>& a,
                                           const Eigen::MatrixBase<DB>& b) {
  return a * b + b * a;
}

template <typename DA, typename DB>
Matrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Matrix<typename DA::Scalar> out = Eigen::kroneckerProduct(a.derived(), b.derived());
  return out;
}

/// ab - (-1)^{da db} ba
CMatrix graded_commutator(const GradedOperator& a, const GradedOperator& b);

/// The graded "1 (x) b" on H_left (x) H_right: gamma_left^{deg b} (x) b.
CMatrix graded_right_lift(const GradedOperator& b, const Grading& gamma_left);

/// a (x) 1 on H_left (x) H_right.
CMatrix left_lift(const CMatrix& a, Index right_dim);

template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix<typename Derived::Scalar>> svd(a);
  return svd.singularValues()(0);
}

/// ||a - b||_F / max(1, ||a||_F)
double relative_distance(const CMatrix& a, const CMatrix& b);

/// Orthonormal basis (Frobenius inner product tr(A^* B)) of a span of
/// equally-shaped matrices.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(Index rows, Index cols, CMatrix columns, double rank_tol);

  Index dimension() const { return columns_.cols(); }
  bool empty() const { return dimension() == 0; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  double rank_tol() const { return rank_tol_; }

  /// k-th basis matrix.
  CMatrix element(Index k) const;
  std::vector<CMatrix> elements() const;
  /// Vectorized basis, one column per basis element.
  const CMatrix& columns() const { return columns_; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  CMatrix columns_;
  double rank_tol_ = kDefaultRankTol;
};

/// Directions with singular value <= rank_tol * max(sigma_max, reference_scale)
/// are discarded. A positive reference_scale keeps all-noise inputs at rank 0.
SubspaceBasis subspace_basis(std::span<const CMatrix> mats, double rank_tol = kDefaultRankTol,
                             double reference_scale = 0.0);

/// Orthogonal projection of a onto span(basis).
CMatrix project_onto(const CMatrix& a, const SubspaceBasis& basis);

/// a minus its projection onto span(basis).
CMatrix project_off(const CMatrix& a, const SubspaceBasis& basis);

/// ||a - proj(a)||_F / max(1, ||a||_F)
double membership_residual(const CMatrix& a, const SubspaceBasis& basis);

/// Orthonormal basis of the numerical null space of L, cut at rank_tol * sigma_max.
std::vector<CVector> solve_kernel(const CMatrix& L, double rank_tol = kDefaultRankTol,
                                  double reference_scale = 0.0);

/// Column-major flattening.
CVector vectorize(const CMatrix& a);
CMatrix unvectorize(const CVector& v, Index rows, Index cols);

}  // namespace ncgcurv
