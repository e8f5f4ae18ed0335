#include "ncgcurv/curvature.hpp"

#include <algorithm>

namespace ncgcurv {

CMatrix curvature_direct(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol) {
  const CMatrix M = product_operator(module, A, tol).mat;
  const CMatrix N = product_operator_sq_lift(module, A, tol).mat;
  return M * M - N;
}

CMatrix curvature_formula(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol) {
  const CMatrix& P = module.projection();
  const CMatrix Dt = module.lifted_dirac();
  const RepresentedConnection rc = represent_connection(module, A, tol);
  const CMatrix dP = commutator(Dt, P);
  // dA through the anticommutator identity; A_D is odd so the graded commutator
  // with the odd D~ is an anticommutator.
  const CMatrix dA = P * (anticommutator(Dt, rc.A_D) - rc.A_D2) * P;
  return P * dP * dP * P + rc.A_D * rc.A_D + dA;
}

SubspaceBasis lifted_junk_space(const ProjectiveModule& module, const FormSpace& junk, double rank_tol) {
  const Index m = module.generators();
  const Index N = module.dim();
  const CMatrix& P = module.projection();
  std::vector<CMatrix> gens;
  for (const CMatrix& J : junk.basis.elements())
    for (Index k = 0; k < m; ++k)
      for (Index l = 0; l < m; ++l) {
        CMatrix E = CMatrix::Zero(m, m);
        E(k, l) = 1.0;
        gens.push_back(P * kron(E, J) * P);
      }
  if (gens.empty()) return SubspaceBasis(N, N, CMatrix(N * N, 0), rank_tol);
  return subspace_basis(gens, rank_tol, 1.0);
}

CurvatureReport curvature_report(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol,
                                 double rank_tol) {
  CurvatureReport rep;
  rep.R = curvature_direct(module, A, tol);
  rep.R_formula = curvature_formula(module, A, tol);
  rep.route_residual = relative_distance(rep.R, rep.R_formula);
  rep.routes_consistent = rep.route_residual <= tol;
  const CMatrix G = module.total_grading();
  const CMatrix& P = module.projection();
  rep.symmetry_residual = (rep.R - rep.R.adjoint()).norm();
  rep.evenness_residual = (G * rep.R * G - rep.R).norm();
  rep.support_residual = (P * rep.R * P - rep.R).norm();
  rep.norm = spectral_norm(rep.R);
  const SubspaceBasis lifted = lifted_junk_space(module, junk_space(module.triple(), rank_tol), rank_tol);
  rep.junk_dimension = lifted.dimension();
  rep.junk_canonical = project_off(rep.R, lifted);
  return rep;
}

double junk_coset_residual(const CMatrix& R1, const CMatrix& R2, const SubspaceBasis& lifted_junk) {
  return membership_residual(R1 - R2, lifted_junk);
}

double junk_coset_residual(const CMatrix& R1, const CMatrix& R2, const ProjectiveModule& module,
                           double rank_tol) {
  return junk_coset_residual(
      R1, R2, lifted_junk_space(module, junk_space(module.triple(), rank_tol), rank_tol));
}

CMatrix assemble_vertical(const ProjectiveModule& module, const VerticalOperator& S, double tol) {
  if (S.S.size() != module.generators()) throw DimensionError("vertical operator has the wrong size");
  const CMatrix St = module.assemble(S.S);
  const double scale = std::max(1.0, St.norm());
  const double sa = (St - St.adjoint()).norm() / scale;
  if (!(sa <= tol)) throw InvariantError("vertical operator is not self-adjoint", sa);
  const CMatrix& P = module.projection();
  const double comp = (P * St * P - St).norm() / scale;
  if (!(comp <= tol)) throw InvariantError("vertical operator is not compressed by p", comp);
  const CMatrix G = module.total_grading();
  const double odd = (G * St * G + St).norm() / scale;
  if (!(odd <= tol)) throw InvariantError("vertical operator is not odd", odd);
  return St;
}

CMatrix correspondence_curvature(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                 const VerticalOperator& S, double tol) {
  const CMatrix St = assemble_vertical(module, S, tol);
  const CMatrix M = product_operator(module, A, tol).mat;
  const CMatrix N = product_operator_sq_lift(module, A, tol).mat;
  const CMatrix T = St + M;
  return T * T - St * St - N;
}

double correspondence_decomposition_residual(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                             const VerticalOperator& S, double tol) {
  const CMatrix St = assemble_vertical(module, S, tol);
  const CMatrix M = product_operator(module, A, tol).mat;
  const CMatrix expected = curvature_direct(module, A, tol) + anticommutator(St, M);
  return (correspondence_curvature(module, A, S, tol) - expected).norm();
}

double vertical_anticommutator_ratio(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                     const VerticalOperator& S, double tol) {
  const CMatrix St = assemble_vertical(module, S, tol);
  const CMatrix M = product_operator(module, A, tol).mat;
  return spectral_norm(anticommutator(St, M)) / (spectral_norm(St) + 1.0);
}

CMatrix external_product_defect(const SpectralTriple& st1, const SpectralTriple& st2) {
  const Index n1 = st1.dim();
  const Index n2 = st2.dim();
  const CMatrix T = left_lift(st1.dirac(), n2) + graded_right_lift({st2.dirac(), Parity::odd}, st1.grading());
  return T * T - left_lift(st1.dirac_squared(), n2) -
         kron(CMatrix::Identity(n1, n1), st2.dirac_squared());
}

CMatrix ungraded_external_defect(const SpectralTriple& st1, const SpectralTriple& st2) {
  const Index n1 = st1.dim();
  const Index n2 = st2.dim();
  const CMatrix T = left_lift(st1.dirac(), n2) + kron(CMatrix::Identity(n1, n1), st2.dirac());
  return T * T - left_lift(st1.dirac_squared(), n2) -
         kron(CMatrix::Identity(n1, n1), st2.dirac_squared());
}

}  // namespace ncgcurv
