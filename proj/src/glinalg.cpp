#include "ncgcurv/glinalg.hpp"

#include <algorithm>
#include <cmath>

namespace ncgcurv {

namespace {

// Rotate a unit vector so its first non-negligible component is real and positive.
void fix_phase(Eigen::Ref<CVector> v) {
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-8) {
      v *= std::conj(v(i)) / mag;
      return;
    }
  }
}

Index numerical_rank(const Eigen::VectorXd& sigma, double rank_tol, double reference_scale) {
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double cut = rank_tol * std::max(sigma(0), reference_scale);
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cut) ++r;
  return r;
}

}  // namespace

Grading Grading::diagonal(std::span<const int> signs) {
  CMatrix g = CMatrix::Zero(static_cast<Index>(signs.size()), static_cast<Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) g(static_cast<Index>(i), static_cast<Index>(i)) = double(signs[i]);
  return Grading(std::move(g));
}

double Grading::involution_residual() const {
  return (mat_ * mat_ - CMatrix::Identity(size(), size())).norm();
}

double Grading::adjoint_residual() const { return (mat_.adjoint() - mat_).norm(); }

double Grading::parity_residual(const CMatrix& a, Parity p) const {
  if (a.rows() != size() || a.cols() != size())
    throw DimensionError("grading and operator sizes differ");
  return (mat_ * a * mat_ - double(koszul_sign(p)) * a).norm();
}

CMatrix graded_commutator(const GradedOperator& a, const GradedOperator& b) {
  if (a.mat.cols() != b.mat.rows() || b.mat.cols() != a.mat.rows() || a.mat.rows() != a.mat.cols())
    throw DimensionError("graded_commutator: incompatible sizes");
  // (-1)^{|a||b|}: only two odd operators anticommute.
  const bool both_odd = a.degree == Parity::odd && b.degree == Parity::odd;
  return both_odd ? CMatrix(a.mat * b.mat + b.mat * a.mat) : CMatrix(a.mat * b.mat - b.mat * a.mat);
}

CMatrix graded_right_lift(const GradedOperator& b, const Grading& gamma_left) {
  if (b.degree == Parity::odd) return kron(gamma_left.matrix(), b.mat);
  return kron(CMatrix::Identity(gamma_left.size(), gamma_left.size()), b.mat);
}

CMatrix left_lift(const CMatrix& a, Index right_dim) {
  return kron(a, CMatrix::Identity(right_dim, right_dim));
}

double relative_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("relative_distance: shape mismatch");
  return (a - b).norm() / std::max(1.0, a.norm());
}

CVector vectorize(const CMatrix& a) {
  return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvectorize(const CVector& v, Index rows, Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

SubspaceBasis::SubspaceBasis(Index rows, Index cols, CMatrix columns, double rank_tol)
    : rows_(rows), cols_(cols), columns_(std::move(columns)), rank_tol_(rank_tol) {
  if (columns_.rows() != rows_ * cols_)
    throw DimensionError("SubspaceBasis: column length does not match matrix shape");
}

CMatrix SubspaceBasis::element(Index k) const {
  return unvectorize(columns_.col(k), rows_, cols_);
}

std::vector<CMatrix> SubspaceBasis::elements() const {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(dimension()));
  for (Index k = 0; k < dimension(); ++k) out.push_back(element(k));
  return out;
}

SubspaceBasis subspace_basis(std::span<const CMatrix> mats, double rank_tol, double reference_scale) {
  if (mats.empty()) return SubspaceBasis(0, 0, CMatrix(0, 0), rank_tol);
  const Index rows = mats.front().rows();
  const Index cols = mats.front().cols();
  CMatrix data(rows * cols, static_cast<Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != rows || mats[k].cols() != cols)
      throw DimensionError("subspace_basis: matrices of different shapes");
    data.col(static_cast<Index>(k)) = vectorize(mats[k]);
  }
  Eigen::JacobiSVD<CMatrix> svd(data, Eigen::ComputeThinU);
  const Index r = numerical_rank(svd.singularValues(), rank_tol, reference_scale);
  CMatrix basis = svd.matrixU().leftCols(r);
  for (Index k = 0; k < r; ++k) fix_phase(basis.col(k));
  return SubspaceBasis(rows, cols, std::move(basis), rank_tol);
}

CMatrix project_onto(const CMatrix& a, const SubspaceBasis& basis) {
  if (basis.empty()) return CMatrix::Zero(a.rows(), a.cols());
  if (a.rows() != basis.rows() || a.cols() != basis.cols())
    throw DimensionError("project_onto: shape mismatch");
  const CVector v = vectorize(a);
  const CVector proj = basis.columns() * (basis.columns().adjoint() * v);
  return unvectorize(proj, a.rows(), a.cols());
}

CMatrix project_off(const CMatrix& a, const SubspaceBasis& basis) {
  return a - project_onto(a, basis);
}

double membership_residual(const CMatrix& a, const SubspaceBasis& basis) {
  return project_off(a, basis).norm() / std::max(1.0, a.norm());
}

std::vector<CVector> solve_kernel(const CMatrix& L, double rank_tol, double reference_scale) {
  std::vector<CVector> out;
  if (L.cols() == 0) return out;
  Eigen::JacobiSVD<CMatrix> svd(L, Eigen::ComputeFullV);
  const Index r = numerical_rank(svd.singularValues(), rank_tol, reference_scale);
  CMatrix V = svd.matrixV();
  for (Index k = r; k < L.cols(); ++k) {
    fix_phase(V.col(k));
    out.emplace_back(V.col(k));
  }
  return out;
}

}  // namespace ncgcurv
