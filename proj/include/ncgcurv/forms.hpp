#pragma once

#include <vector>

#include "ncgcurv/glinalg.hpp"
#include "ncgcurv/triple.hpp"

namespace ncgcurv {

/// Universal one-form  sum_{ij} c_ij b_i (x) b_j  over the algebra basis of a triple.
///
/// Because the algebra is finite-dimensional the coefficient table spans all of
/// B (x) B; membership in ker(m) is a property (mult_residual), not a type invariant.
struct UniversalOneForm {
  CMatrix coeffs;  // d x d

  UniversalOneForm() = default;
  explicit UniversalOneForm(CMatrix c) : coeffs(std::move(c)) {}
  static UniversalOneForm zero(Index d) { return UniversalOneForm(CMatrix::Zero(d, d)); }
  Index algebra_dim() const { return coeffs.rows(); }
};

inline UniversalOneForm operator+(const UniversalOneForm& a, const UniversalOneForm& b) {
  return UniversalOneForm(a.coeffs + b.coeffs);
}
inline UniversalOneForm operator-(const UniversalOneForm& a, const UniversalOneForm& b) {
  return UniversalOneForm(a.coeffs - b.coeffs);
}
inline UniversalOneForm operator*(Complex s, const UniversalOneForm& w) {
  return UniversalOneForm(s * w.coeffs);
}

enum class FormDegree { zero, one, two, junk };

const char* to_string(FormDegree d);

struct FormSpace {
  FormDegree degree = FormDegree::one;
  SubspaceBasis basis;

  Index dimension() const { return basis.dimension(); }
  double rank_tol() const { return basis.rank_tol(); }
};

/// delta(b) = 1 (x) b - b (x) 1
UniversalOneForm delta(const SpectralTriple& st, const AlgebraElement& b);

/// a . omega, products a b_i re-expanded in the basis.
UniversalOneForm left_mult(const SpectralTriple& st, const AlgebraElement& a, const UniversalOneForm& w);
/// omega . a
UniversalOneForm right_mult(const SpectralTriple& st, const UniversalOneForm& w, const AlgebraElement& a);
/// (a (x) b)^* = b^* (x) a^*, so that pi_D(w^*) = pi_D(w)^*.
UniversalOneForm form_adjoint(const SpectralTriple& st, const UniversalOneForm& w);

/// || sum c_ij b_i b_j ||_F
double mult_residual(const SpectralTriple& st, const UniversalOneForm& w);
CMatrix mult_image(const SpectralTriple& st, const UniversalOneForm& w);

/// sum c_ij b_i [D, b_j]
CMatrix pi_D(const SpectralTriple& st, const UniversalOneForm& w);
/// sum c_ij b_i [D^2, b_j]
CMatrix pi_D2(const SpectralTriple& st, const UniversalOneForm& w);
/// sum c_ij [D, b_i] b_j  (vanishes on ker m cap ker pi_D)
CMatrix pi_D_right(const SpectralTriple& st, const UniversalOneForm& w);

/// sum c_ij [D, b_i][D, b_j], computed directly.
CMatrix two_form_direct(const SpectralTriple& st, const UniversalOneForm& w);
/// {D, pi_D(w)} - pi_D2(w)
CMatrix two_form_via_anticommutator(const SpectralTriple& st, const UniversalOneForm& w);

/// Scale used for the two-form cross-check: max(1, sum |c_ij| ||b_i|| ||b_j||) * max(1, ||D||)^2.
double two_form_scale(const SpectralTriple& st, const UniversalOneForm& w);

/// Represented two-form of w. Computed directly and cross-checked against
/// {D, pi_D(w)} - pi_D2(w); throws InvariantError if they differ by more than
/// tol * two_form_scale.
CMatrix two_form_of(const SpectralTriple& st, const UniversalOneForm& w, double tol = 1e-9);

FormSpace one_form_space(const SpectralTriple& st, double rank_tol = kDefaultRankTol);
FormSpace two_form_space(const SpectralTriple& st, double rank_tol = kDefaultRankTol);

/// Orthonormal basis (as forms) of ker m cap ker pi_D.
std::vector<UniversalOneForm> pi_D_kernel(const SpectralTriple& st, double rank_tol = kDefaultRankTol);

/// J^2 = span pi_D2(ker m cap ker pi_D).
FormSpace junk_space(const SpectralTriple& st, double rank_tol = kDefaultRankTol);

/// Canonical representative of M modulo junk: M minus its projection on span(junk).
CMatrix project_mod_junk(const CMatrix& M, const FormSpace& junk);

}  // namespace ncgcurv
