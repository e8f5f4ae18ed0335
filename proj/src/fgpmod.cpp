#include "ncgcurv/fgpmod.hpp"

#include <algorithm>

namespace ncgcurv {

namespace {

CMatrix diag_signs(const std::vector<int>& signs) {
  CMatrix g = CMatrix::Zero(static_cast<Index>(signs.size()), static_cast<Index>(signs.size()));
  for (std::size_t k = 0; k < signs.size(); ++k) g(static_cast<Index>(k), static_cast<Index>(k)) = double(signs[k]);
  return g;
}

double rel(double residual, const CMatrix& scale) { return residual / std::max(1.0, scale.norm()); }

}  // namespace

ProjectiveModule::ProjectiveModule(SpectralTriple triple, AlgebraTable p, std::vector<int> grading)
    : triple_(std::move(triple)), p_(std::move(p)), grading_(std::move(grading)) {
  if (static_cast<Index>(grading_.size()) != p_.size())
    throw DimensionError("module grading length differs from the number of generators");
  for (int s : grading_)
    if (s != 1 && s != -1) throw DimensionError("module grading entries must be +1 or -1");
  P_ = assemble(p_);
}

ProjectiveModule ProjectiveModule::free(SpectralTriple triple, std::vector<int> grading) {
  const Index m = static_cast<Index>(grading.size());
  const Index d = triple.algebra_dim();
  AlgebraTable p(m, AlgebraElement::zero(d));
  for (Index k = 0; k < m; ++k) p(k, k) = AlgebraElement::unit(d, 0);
  return ProjectiveModule(std::move(triple), std::move(p), std::move(grading));
}

CMatrix ProjectiveModule::module_grading() const {
  return kron(diag_signs(grading_), CMatrix::Identity(triple_.dim(), triple_.dim()));
}

CMatrix ProjectiveModule::total_grading() const { return kron(diag_signs(grading_), triple_.gamma()); }

CMatrix ProjectiveModule::lifted_dirac() const { return kron(diag_signs(grading_), triple_.dirac()); }

CMatrix ProjectiveModule::ungraded_dirac() const {
  return kron(CMatrix::Identity(generators(), generators()), triple_.dirac());
}

CMatrix ProjectiveModule::lifted_dirac_squared() const {
  return kron(CMatrix::Identity(generators(), generators()), triple_.dirac_squared());
}

CMatrix ProjectiveModule::assemble(const AlgebraTable& t) const {
  const Index m = t.size();
  const Index n = triple_.dim();
  CMatrix out = CMatrix::Zero(m * n, m * n);
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) out.block(k * n, l * n, n, n) = triple_.to_matrix(t(k, l));
  return out;
}

AlgebraTable ProjectiveModule::disassemble(const CMatrix& M, double tol) const {
  const Index m = generators();
  const Index n = triple_.dim();
  if (M.rows() != m * n || M.cols() != m * n) throw DimensionError("disassemble: wrong size");
  AlgebraTable t(m, AlgebraElement::zero(triple_.algebra_dim()));
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) t(k, l) = algebra_coords(triple_, M.block(k * n, l * n, n, n), tol);
  return t;
}

CMatrix build_projector(const ProjectiveModule& module, double tol) {
  const CMatrix& P = module.projection();
  const double idem = rel((P * P - P).norm(), P);
  if (!(idem <= tol)) throw InvariantError("module projection is not idempotent", idem);
  const double sa = rel((P.adjoint() - P).norm(), P);
  if (!(sa <= tol)) throw InvariantError("module projection is not self-adjoint", sa);
  const CMatrix G = module.module_grading();
  const double even = rel((G * P * G - P).norm(), P);
  if (!(even <= tol)) throw InvariantError("module projection is not even", even);
  return P;
}

UniversalConnectionForm operator+(const UniversalConnectionForm& a, const UniversalConnectionForm& b) {
  if (a.A.size() != b.A.size()) throw DimensionError("connection forms of different sizes");
  UniversalConnectionForm out = a;
  for (Index k = 0; k < a.A.size(); ++k)
    for (Index l = 0; l < a.A.size(); ++l) out.A(k, l) = a.A(k, l) + b.A(k, l);
  out.hermitian = a.hermitian && b.hermitian;
  return out;
}

RepresentedConnection assemble_connection(const ProjectiveModule& module, const UniversalConnectionForm& A) {
  const Index m = module.generators();
  if (A.A.size() != m) throw DimensionError("connection form size differs from the number of generators");
  const Index n = module.triple().dim();
  RepresentedConnection rc{CMatrix::Zero(m * n, m * n), CMatrix::Zero(m * n, m * n)};
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) {
      rc.A_D.block(k * n, l * n, n, n) = pi_D(module.triple(), A.A(k, l));
      rc.A_D2.block(k * n, l * n, n, n) = pi_D2(module.triple(), A.A(k, l));
    }
  return rc;
}

RepresentedConnection represent_connection(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                           double tol) {
  RepresentedConnection rc = assemble_connection(module, A);
  const CMatrix& P = module.projection();
  const double comp = rel((P * rc.A_D * P - rc.A_D).norm(), rc.A_D);
  if (!(comp <= tol)) throw InvariantError("connection form is not compressed by p", comp);
  const CMatrix G = module.total_grading();
  const double odd = rel((G * rc.A_D * G + rc.A_D).norm(), rc.A_D);
  if (!(odd <= tol)) throw InvariantError("represented connection form is not odd", odd);
  return rc;
}

UniversalConnectionForm compress_connection(const ProjectiveModule& module, const UniversalConnectionForm& A) {
  const SpectralTriple& st = module.triple();
  const Index m = module.generators();
  const Index d = st.algebra_dim();
  const auto& sign = module.grading_signs();

  Table<UniversalOneForm> masked(m, UniversalOneForm::zero(d));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (sign[static_cast<std::size_t>(a)] == sign[static_cast<std::size_t>(b)]) masked(a, b) = A.A(a, b);

  // Left and right multiplication matrices of every p entry, computed once.
  Table<CMatrix> left(m, CMatrix());
  Table<CMatrix> right(m, CMatrix());
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      left(a, b) = left_multiplication_matrix(st, module.p()(a, b));
      right(a, b) = right_multiplication_matrix(st, module.p()(a, b));
    }

  UniversalConnectionForm out{Table<UniversalOneForm>(m, UniversalOneForm::zero(d)), A.hermitian};
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) {
      CMatrix c = CMatrix::Zero(d, d);
      for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) c += left(k, a) * masked(a, b).coeffs * right(b, l).transpose();
      out.A(k, l) = UniversalOneForm(std::move(c));
    }
  return out;
}

UniversalConnectionForm hermitian_part(const ProjectiveModule& module, const UniversalConnectionForm& A) {
  const Index m = module.generators();
  UniversalConnectionForm out = A;
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l)
      out.A(k, l) = Complex(0.5) * (A.A(k, l) + form_adjoint(module.triple(), A.A(l, k)));
  out.hermitian = true;
  return out;
}

ProductOperator grassmann_product_operator(const ProjectiveModule& module) {
  const CMatrix& P = module.projection();
  return ProductOperator{P * module.lifted_dirac() * P, P, module.total_grading()};
}

ProductOperator product_operator(const ProjectiveModule& module, const UniversalConnectionForm& A, double tol) {
  ProductOperator op = grassmann_product_operator(module);
  op.mat += represent_connection(module, A, tol).A_D;
  return op;
}

ProductOperator product_operator_sq_lift(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                         double tol) {
  const CMatrix& P = module.projection();
  return ProductOperator{P * module.lifted_dirac_squared() * P + represent_connection(module, A, tol).A_D2, P,
                         module.total_grading()};
}

CMatrix grassmann_connection_matrix(const ProjectiveModule& module) {
  const CMatrix& P = module.projection();
  return module.module_grading() * P * commutator(module.ungraded_dirac(), P);
}

double hermitian_residual(const ProjectiveModule& module, const UniversalConnectionForm& A) {
  const CMatrix& P = module.projection();
  const CMatrix nabla = grassmann_connection_matrix(module) + assemble_connection(module, A).A_D;
  // Block (i, j): Gamma_i (<x_i, nabla x_j> - <nabla x_i, x_j>) - [D, p_ij].
  const CMatrix defect = module.module_grading() * (P * nabla - nabla.adjoint() * P) -
                         commutator(module.ungraded_dirac(), P);
  const Index m = module.generators();
  const Index n = module.triple().dim();
  double worst = 0.0;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) worst = std::max(worst, spectral_norm(defect.block(i * n, j * n, n, n)));
  return worst;
}

CMatrix range_basis(const CMatrix& P) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(P);
  const auto& ev = es.eigenvalues();
  std::vector<Index> keep;
  for (Index k = 0; k < ev.size(); ++k)
    if (ev(k) > 0.5) keep.push_back(k);
  CMatrix V(P.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) V.col(static_cast<Index>(c)) = es.eigenvectors().col(keep[c]);
  return V;
}

std::vector<double> spectrum(const ProductOperator& op, double tol) {
  const CMatrix V = range_basis(op.P);
  const CMatrix restricted = V.adjoint() * op.mat * V;
  const double asym = rel((restricted - restricted.adjoint()).norm(), restricted);
  if (!(asym <= tol)) throw InvariantError("spectrum: operator is not symmetric on range(P)", asym);
  std::vector<double> out;
  if (restricted.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(restricted, Eigen::EigenvaluesOnly);
  for (Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

}  // namespace ncgcurv
