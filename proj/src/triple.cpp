#include "ncgcurv/triple.hpp"

#include <cmath>
#include <limits>

namespace ncgcurv {

SpectralTriple::SpectralTriple(Grading gamma, std::vector<CMatrix> algebra_basis, CMatrix dirac)
    : gamma_(std::move(gamma)), basis_(std::move(algebra_basis)), dirac_(std::move(dirac)) {
  const Index n = dirac_.rows();
  if (dirac_.cols() != n) {
    shape_error_ = "dirac operator is not square";
  } else if (gamma_.size() != n || gamma_.matrix().cols() != n) {
    shape_error_ = "grading and dirac operator sizes differ";
  } else if (basis_.empty()) {
    shape_error_ = "algebra basis is empty";
  } else {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_[k].rows() != n || basis_[k].cols() != n) {
        shape_error_ = "algebra basis element " + std::to_string(k) + " has the wrong shape";
        break;
      }
    }
  }
  if (!shape_error_.empty()) return;

  dirac_sq_ = dirac_ * dirac_;
  comm_.reserve(basis_.size());
  comm_sq_.reserve(basis_.size());
  stacked_.resize(n * n, algebra_dim());
  for (Index k = 0; k < algebra_dim(); ++k) {
    const CMatrix& b = basis_[static_cast<std::size_t>(k)];
    comm_.push_back(commutator(dirac_, b));
    comm_sq_.push_back(commutator(dirac_sq_, b));
    stacked_.col(k) = vectorize(b);
  }
  qr_.compute(stacked_);
}

CMatrix SpectralTriple::to_matrix(const AlgebraElement& a) const {
  if (a.size() != algebra_dim()) throw DimensionError("algebra element has the wrong length");
  CMatrix out = CMatrix::Zero(dim(), dim());
  for (Index k = 0; k < algebra_dim(); ++k) out += a.coeffs(k) * basis(k);
  return out;
}

CVector SpectralTriple::least_squares_coords(const CMatrix& M, double* residual) const {
  if (M.rows() != dim() || M.cols() != dim()) throw DimensionError("algebra_coords: M is not n x n");
  const CVector v = vectorize(M);
  CVector c = qr_.solve(v);
  if (residual != nullptr) *residual = (stacked_ * c - v).norm() / std::max(1.0, v.norm());
  return c;
}

ValidationReport validate(const SpectralTriple& st, double tol) {
  ValidationReport rep;
  if (!st.shapes_consistent()) {
    rep.checks.push_back(
        Check{"shapes: " + st.shape_error(), std::numeric_limits<double>::infinity(), tol, false, true});
    return rep;
  }
  const Index n = st.dim();
  const Index d = st.algebra_dim();
  const CMatrix& D = st.dirac();
  const CMatrix& g = st.gamma();
  const CMatrix I = CMatrix::Identity(n, n);

  rep.checks.push_back(make_check("grading involution", st.grading().involution_residual(), tol));
  rep.checks.push_back(make_check("grading self-adjoint", st.grading().adjoint_residual(), tol));
  rep.checks.push_back(make_check("dirac self-adjoint", (D.adjoint() - D).norm(), tol));
  rep.checks.push_back(make_check("dirac odd", (g * D * g + D).norm(), tol));
  rep.checks.push_back(make_check("unit is identity", (st.basis(0) - I).norm(), tol));

  double even = 0.0;
  for (Index k = 0; k < d; ++k) even = std::max(even, (g * st.basis(k) * g - st.basis(k)).norm());
  rep.checks.push_back(make_check("algebra even", even, tol));

  // Independence: smallest singular value of the stacked basis, relative to the largest.
  CMatrix stacked(n * n, d);
  for (Index k = 0; k < d; ++k) stacked.col(k) = vectorize(st.basis(k));
  Eigen::JacobiSVD<CMatrix> svd(stacked);
  const auto& s = svd.singularValues();
  const double independence = s(0) > 0 ? s(d - 1) / s(0) : 0.0;
  rep.checks.push_back(
      Check{"basis independent (sigma_min/sigma_max above tolerance)", independence, tol, independence > tol, false});

  double product = 0.0;
  double star = 0.0;
  for (Index i = 0; i < d; ++i) {
    double r = 0.0;
    st.least_squares_coords(st.basis(i).adjoint(), &r);
    star = std::max(star, r);
    for (Index j = 0; j < d; ++j) {
      st.least_squares_coords(st.basis(i) * st.basis(j), &r);
      product = std::max(product, r);
    }
  }
  rep.checks.push_back(make_check("algebra closed under product", product, tol));
  rep.checks.push_back(make_check("algebra closed under adjoint", star, tol));
  return rep;
}

AlgebraElement algebra_coords(const SpectralTriple& st, const CMatrix& M, double tol) {
  double r = 0.0;
  CVector c = st.least_squares_coords(M, &r);
  if (!(r <= tol)) throw NotInAlgebraError("matrix is not in the algebra", r);
  return AlgebraElement(std::move(c));
}

AlgebraElement multiply(const SpectralTriple& st, const AlgebraElement& a, const AlgebraElement& b,
                        double tol) {
  return algebra_coords(st, st.to_matrix(a) * st.to_matrix(b), tol);
}

AlgebraElement adjoint(const SpectralTriple& st, const AlgebraElement& a, double tol) {
  return algebra_coords(st, st.to_matrix(a).adjoint(), tol);
}

CMatrix left_multiplication_matrix(const SpectralTriple& st, const AlgebraElement& a, double tol) {
  const CMatrix am = st.to_matrix(a);
  CMatrix L(st.algebra_dim(), st.algebra_dim());
  for (Index k = 0; k < st.algebra_dim(); ++k) L.col(k) = algebra_coords(st, am * st.basis(k), tol).coeffs;
  return L;
}

CMatrix right_multiplication_matrix(const SpectralTriple& st, const AlgebraElement& a, double tol) {
  const CMatrix am = st.to_matrix(a);
  CMatrix R(st.algebra_dim(), st.algebra_dim());
  for (Index k = 0; k < st.algebra_dim(); ++k) R.col(k) = algebra_coords(st, st.basis(k) * am, tol).coeffs;
  return R;
}

CMatrix adjoint_matrix(const SpectralTriple& st, double tol) {
  CMatrix S(st.algebra_dim(), st.algebra_dim());
  for (Index k = 0; k < st.algebra_dim(); ++k)
    S.col(k) = algebra_coords(st, st.basis(k).adjoint(), tol).coeffs;
  return S;
}

CMatrix c1_representation(const SpectralTriple& st, const CMatrix& a) {
  const Index n = st.dim();
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = a;
  out.bottomLeftCorner(n, n) = commutator(st.dirac(), a);
  out.bottomRightCorner(n, n) = a;
  return out;
}

CMatrix c2_representation(const SpectralTriple& st, const CMatrix& a) {
  const Index n = st.dim();
  const CMatrix shifted = st.dirac() + Complex(0.0, 1.0) * CMatrix::Identity(n, n);
  // (D + i)^{-1} via a direct solve; D self-adjoint keeps D + i invertible.
  const CMatrix resolvent = shifted.partialPivLu().solve(CMatrix::Identity(n, n));
  CMatrix out = CMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = shifted * a * resolvent;
  out.bottomLeftCorner(n, n) = commutator(st.dirac_squared(), a) * resolvent;
  out.bottomRightCorner(n, n) = a;
  return out;
}

double c1_norm(const SpectralTriple& st, const AlgebraElement& a) {
  return spectral_norm(c1_representation(st, st.to_matrix(a)));
}

double c2_norm(const SpectralTriple& st, const AlgebraElement& a) {
  const CMatrix am = st.to_matrix(a);
  return std::max({spectral_norm(c1_representation(st, am)), spectral_norm(c2_representation(st, am)),
                   spectral_norm(c2_representation(st, am.adjoint()))});
}

}  // namespace ncgcurv
