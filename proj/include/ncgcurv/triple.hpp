#pragma once

#include <string>
#include <vector>

#include "ncgcurv/glinalg.hpp"
#include "ncgcurv/report.hpp"

namespace ncgcurv {

/// Coordinates of an algebra element in the triple's algebra basis.
struct AlgebraElement {
  CVector coeffs;

  AlgebraElement() = default;
  explicit AlgebraElement(CVector c) : coeffs(std::move(c)) {}
  static AlgebraElement zero(Index d) { return AlgebraElement(CVector::Zero(d)); }
  static AlgebraElement unit(Index d, Index k) {
    AlgebraElement a = zero(d);
    a.coeffs(k) = 1.0;
    return a;
  }
  Index size() const { return coeffs.size(); }
};

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.coeffs + b.coeffs);
}
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.coeffs - b.coeffs);
}
inline AlgebraElement operator*(Complex s, const AlgebraElement& a) {
  return AlgebraElement(s * a.coeffs);
}

/// Thrown by algebra_coords when a matrix is not in the span of the algebra basis.
class NotInAlgebraError : public std::runtime_error {
 public:
  NotInAlgebraError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Finite-dimensional even spectral triple (B, H, D) with grading gamma.
///
/// The algebra is given by a basis {b_1, ..., b_d} of n x n matrices with
/// b_1 = 1. The basis is not required to be closed under products when
/// constructing; validate() reports closure, and products are re-expanded
/// through algebra_coords() which fails loudly if they leave the span.
class SpectralTriple {
 public:
  SpectralTriple() = default;
  SpectralTriple(Grading gamma, std::vector<CMatrix> algebra_basis, CMatrix dirac);

  Index dim() const { return dirac_.rows(); }
  Index algebra_dim() const { return static_cast<Index>(basis_.size()); }

  const Grading& grading() const { return gamma_; }
  const CMatrix& gamma() const { return gamma_.matrix(); }
  const CMatrix& dirac() const { return dirac_; }
  const CMatrix& dirac_squared() const { return dirac_sq_; }
  const std::vector<CMatrix>& algebra_basis() const { return basis_; }
  const CMatrix& basis(Index k) const { return basis_[static_cast<std::size_t>(k)]; }
  /// [D, b_k]
  const CMatrix& basis_commutator(Index k) const { return comm_[static_cast<std::size_t>(k)]; }
  /// [D^2, b_k]
  const CMatrix& basis_commutator_sq(Index k) const { return comm_sq_[static_cast<std::size_t>(k)]; }

  /// True when every shape is consistent (n x n everywhere, at least one basis element).
  bool shapes_consistent() const { return shape_error_.empty(); }
  const std::string& shape_error() const { return shape_error_; }

  CMatrix to_matrix(const AlgebraElement& a) const;
  AlgebraElement identity() const { return AlgebraElement::unit(algebra_dim(), 0); }

  /// Least-squares coordinates of M; the residual relative to max(1, ||M||_F).
  CVector least_squares_coords(const CMatrix& M, double* residual) const;

 private:
  Grading gamma_;
  std::vector<CMatrix> basis_;
  CMatrix dirac_;
  CMatrix dirac_sq_;
  std::vector<CMatrix> comm_;
  std::vector<CMatrix> comm_sq_;
  CMatrix stacked_;  // vectorized basis, one column per element
  Eigen::ColPivHouseholderQR<CMatrix> qr_;
  std::string shape_error_;
};

ValidationReport validate(const SpectralTriple& st, double tol = 1e-8);

/// Coordinates of M in the algebra basis, or NotInAlgebraError carrying the residual.
AlgebraElement algebra_coords(const SpectralTriple& st, const CMatrix& M, double tol = 1e-8);

AlgebraElement multiply(const SpectralTriple& st, const AlgebraElement& a, const AlgebraElement& b,
                        double tol = 1e-8);
AlgebraElement adjoint(const SpectralTriple& st, const AlgebraElement& a, double tol = 1e-8);

/// Matrix of x -> a x on algebra coordinates (column k = coords of a b_k).
CMatrix left_multiplication_matrix(const SpectralTriple& st, const AlgebraElement& a,
                                   double tol = 1e-8);
/// Matrix of x -> x a on algebra coordinates (column k = coords of b_k a).
CMatrix right_multiplication_matrix(const SpectralTriple& st, const AlgebraElement& a,
                                    double tol = 1e-8);
/// Column k = coords of b_k^*.
CMatrix adjoint_matrix(const SpectralTriple& st, double tol = 1e-8);

/// pi^1(a) = [[a, 0], [[D,a], a]]
CMatrix c1_representation(const SpectralTriple& st, const CMatrix& a);
/// pi^2(a) = [[(D+i) a (D+i)^{-1}, 0], [[D^2,a](D+i)^{-1}, a]]
CMatrix c2_representation(const SpectralTriple& st, const CMatrix& a);

double c1_norm(const SpectralTriple& st, const AlgebraElement& a);
double c2_norm(const SpectralTriple& st, const AlgebraElement& a);

}  // namespace ncgcurv
