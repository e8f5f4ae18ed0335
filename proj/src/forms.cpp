#include "ncgcurv/forms.hpp"

#include <cmath>

namespace ncgcurv {

namespace {

void require_dim(const SpectralTriple& st, const UniversalOneForm& w) {
  if (w.coeffs.rows() != st.algebra_dim() || w.coeffs.cols() != st.algebra_dim())
    throw DimensionError("one-form table does not match the algebra dimension");
}

// sum_j (sum_i c_ij left_i) right_j
template <typename Left, typename Right>
CMatrix contract(const SpectralTriple& st, const UniversalOneForm& w, Left left, Right right) {
  require_dim(st, w);
  const Index d = st.algebra_dim();
  CMatrix out = CMatrix::Zero(st.dim(), st.dim());
  for (Index j = 0; j < d; ++j) {
    CMatrix acc = CMatrix::Zero(st.dim(), st.dim());
    bool any = false;
    for (Index i = 0; i < d; ++i) {
      if (w.coeffs(i, j) == Complex(0.0)) continue;
      acc += w.coeffs(i, j) * left(i);
      any = true;
    }
    if (any) out += acc * right(j);
  }
  return out;
}

}  // namespace

const char* to_string(FormDegree d) {
  switch (d) {
    case FormDegree::zero: return "0";
    case FormDegree::one: return "1";
    case FormDegree::two: return "2";
    case FormDegree::junk: return "junk";
  }
  return "?";
}

UniversalOneForm delta(const SpectralTriple& st, const AlgebraElement& b) {
  const Index d = st.algebra_dim();
  if (b.size() != d) throw DimensionError("delta: algebra element has the wrong length");
  UniversalOneForm w = UniversalOneForm::zero(d);
  for (Index j = 0; j < d; ++j) {
    w.coeffs(0, j) += b.coeffs(j);
    w.coeffs(j, 0) -= b.coeffs(j);
  }
  return w;
}

UniversalOneForm left_mult(const SpectralTriple& st, const AlgebraElement& a, const UniversalOneForm& w) {
  require_dim(st, w);
  return UniversalOneForm(left_multiplication_matrix(st, a) * w.coeffs);
}

UniversalOneForm right_mult(const SpectralTriple& st, const UniversalOneForm& w, const AlgebraElement& a) {
  require_dim(st, w);
  return UniversalOneForm(w.coeffs * right_multiplication_matrix(st, a).transpose());
}

UniversalOneForm form_adjoint(const SpectralTriple& st, const UniversalOneForm& w) {
  require_dim(st, w);
  const CMatrix S = adjoint_matrix(st);
  return UniversalOneForm(S * w.coeffs.adjoint() * S.transpose());
}

CMatrix mult_image(const SpectralTriple& st, const UniversalOneForm& w) {
  return contract(st, w, [&](Index i) -> const CMatrix& { return st.basis(i); },
                  [&](Index j) -> const CMatrix& { return st.basis(j); });
}

double mult_residual(const SpectralTriple& st, const UniversalOneForm& w) {
  return mult_image(st, w).norm();
}

CMatrix pi_D(const SpectralTriple& st, const UniversalOneForm& w) {
  return contract(st, w, [&](Index i) -> const CMatrix& { return st.basis(i); },
                  [&](Index j) -> const CMatrix& { return st.basis_commutator(j); });
}

CMatrix pi_D2(const SpectralTriple& st, const UniversalOneForm& w) {
  return contract(st, w, [&](Index i) -> const CMatrix& { return st.basis(i); },
                  [&](Index j) -> const CMatrix& { return st.basis_commutator_sq(j); });
}

CMatrix pi_D_right(const SpectralTriple& st, const UniversalOneForm& w) {
  return contract(st, w, [&](Index i) -> const CMatrix& { return st.basis_commutator(i); },
                  [&](Index j) -> const CMatrix& { return st.basis(j); });
}

CMatrix two_form_direct(const SpectralTriple& st, const UniversalOneForm& w) {
  return contract(st, w, [&](Index i) -> const CMatrix& { return st.basis_commutator(i); },
                  [&](Index j) -> const CMatrix& { return st.basis_commutator(j); });
}

CMatrix two_form_via_anticommutator(const SpectralTriple& st, const UniversalOneForm& w) {
  // pi_D(w) is odd and D is odd, so the graded commutator is the anticommutator.
  return anticommutator(st.dirac(), pi_D(st, w)) - pi_D2(st, w);
}

double two_form_scale(const SpectralTriple& st, const UniversalOneForm& w) {
  require_dim(st, w);
  double s = 0.0;
  for (Index i = 0; i < st.algebra_dim(); ++i)
    for (Index j = 0; j < st.algebra_dim(); ++j)
      s += std::abs(w.coeffs(i, j)) * spectral_norm(st.basis(i)) * spectral_norm(st.basis(j));
  const double dn = std::max(1.0, spectral_norm(st.dirac()));
  return std::max(1.0, s) * dn * dn;
}

CMatrix two_form_of(const SpectralTriple& st, const UniversalOneForm& w, double tol) {
  CMatrix direct = two_form_direct(st, w);
  const double r = (direct - two_form_via_anticommutator(st, w)).norm();
  if (!(r <= tol * two_form_scale(st, w)))
    throw InvariantError("two_form_of: direct and anticommutator routes disagree", r);
  return direct;
}

FormSpace one_form_space(const SpectralTriple& st, double rank_tol) {
  std::vector<CMatrix> gens;
  for (Index k = 0; k < st.algebra_dim(); ++k)
    for (Index j = 0; j < st.algebra_dim(); ++j) gens.push_back(st.basis(k) * st.basis_commutator(j));
  return FormSpace{FormDegree::one, subspace_basis(gens, rank_tol, spectral_norm(st.dirac()))};
}

FormSpace two_form_space(const SpectralTriple& st, double rank_tol) {
  std::vector<CMatrix> gens;
  const Index d = st.algebra_dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const CMatrix cc = st.basis_commutator(i) * st.basis_commutator(j);
      for (Index k = 0; k < d; ++k) gens.push_back(st.basis(k) * cc);
    }
  const double dn = spectral_norm(st.dirac());
  return FormSpace{FormDegree::two, subspace_basis(gens, rank_tol, dn * dn)};
}

std::vector<UniversalOneForm> pi_D_kernel(const SpectralTriple& st, double rank_tol) {
  const Index d = st.algebra_dim();
  const Index n2 = st.dim() * st.dim();
  // Column (i + d j) is the image of the elementary tensor b_i (x) b_j under (m, pi_D).
  CMatrix L(2 * n2, d * d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) {
      L.col(i + d * j).head(n2) = vectorize(st.basis(i) * st.basis(j));
      L.col(i + d * j).tail(n2) = vectorize(st.basis(i) * st.basis_commutator(j));
    }
  std::vector<UniversalOneForm> out;
  for (const CVector& v : solve_kernel(L, rank_tol)) out.emplace_back(unvectorize(v, d, d));
  return out;
}

FormSpace junk_space(const SpectralTriple& st, double rank_tol) {
  std::vector<CMatrix> gens;
  for (const auto& w : pi_D_kernel(st, rank_tol)) gens.push_back(pi_D2(st, w));
  if (gens.empty())
    return FormSpace{FormDegree::junk,
                     SubspaceBasis(st.dim(), st.dim(), CMatrix(st.dim() * st.dim(), 0), rank_tol)};
  const double dn = spectral_norm(st.dirac());
  return FormSpace{FormDegree::junk, subspace_basis(gens, rank_tol, dn * dn)};
}

CMatrix project_mod_junk(const CMatrix& M, const FormSpace& junk) {
  return project_off(M, junk.basis);
}

}  // namespace ncgcurv
