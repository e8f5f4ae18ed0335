#pragma once

#include <string>

#include "ncgcurv/fgpmod.hpp"
#include "ncgcurv/forms.hpp"

namespace ncgcurv {

/// Sign convention used throughout: R = (1 (x)_nabla D)^2 - 1 (x)_nabla D^2.
inline constexpr const char* kCurvatureConvention =
    "R = (1 (x)_nabla D)^2 - 1 (x)_nabla D^2; negate to obtain 1 (x)_nabla D^2 - (1 (x)_nabla D)^2";

struct CurvatureReport {
  CMatrix R;
  CMatrix R_formula;
  double route_residual = 0.0;     // ||direct - formula||_F / max(1, ||direct||_F)
  bool routes_consistent = true;   // route_residual <= tol
  double symmetry_residual = 0.0;  // ||R - R^*||_F
  double evenness_residual = 0.0;  // ||(Gamma (x) gamma) R (Gamma (x) gamma) - R||_F
  double support_residual = 0.0;   // ||P R P - R||_F
  double norm = 0.0;               // spectral norm of R
  Index junk_dimension = 0;        // dim of the lifted junk span
  CMatrix junk_canonical;
  std::string convention = kCurvatureConvention;
};

/// Odd self-adjoint adjointable endomorphism of p B^m, as a table of algebra elements.
struct VerticalOperator {
  AlgebraTable S;
};

/// M^2 - N with M = product_operator and N = product_operator_sq_lift.
CMatrix curvature_direct(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol = 1e-8);

/// P[D~,P][D~,P]P + A_D^2 + P({D~, A_D} - A_D2)P with D~ = Gamma (x) D.
CMatrix curvature_formula(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol = 1e-8);

/// span{ P (E_kl (x) J) P : J in junk, all k, l }
SubspaceBasis lifted_junk_space(const ProjectiveModule& module, const FormSpace& junk,
                                double rank_tol = kDefaultRankTol);

/// Both routes, diagnostics and the junk-canonical representative of R.
CurvatureReport curvature_report(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                 double tol = 1e-8, double rank_tol = kDefaultRankTol);

double junk_coset_residual(const CMatrix& R1, const CMatrix& R2, const SubspaceBasis& lifted_junk);
double junk_coset_residual(const CMatrix& R1, const CMatrix& R2, const ProjectiveModule& module,
                           double rank_tol = kDefaultRankTol);

/// Assembled S~; throws InvariantError unless S~ is self-adjoint, compressed and odd.
CMatrix assemble_vertical(const ProjectiveModule& module, const VerticalOperator& S, double tol = 1e-8);

/// (S~ + M)^2 - S~^2 - N
CMatrix correspondence_curvature(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                 const VerticalOperator& S, double tol = 1e-8);

/// || R_(S,nabla) - (R_nabla + {S~, M}) ||_F
double correspondence_decomposition_residual(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                             const VerticalOperator& S, double tol = 1e-8);

/// ||{S~, M}|| / (||S~|| + 1), the finite-dimensional echo of the relative
/// bound in a vertically anticommuting pair.
double vertical_anticommutator_ratio(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                     const VerticalOperator& S, double tol = 1e-8);

/// (D1 (x) 1 + gamma1 (x) D2)^2 - D1^2 (x) 1 - 1 (x) D2^2
CMatrix external_product_defect(const SpectralTriple& st1, const SpectralTriple& st2);

/// Same without the Koszul sign: (D1 (x) 1 + 1 (x) D2)^2 - ... = 2 D1 (x) D2.
CMatrix ungraded_external_defect(const SpectralTriple& st1, const SpectralTriple& st2);

}  // namespace ncgcurv
