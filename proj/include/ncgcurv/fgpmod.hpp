#pragma once

#include <vector>

#include "ncgcurv/forms.hpp"
#include "ncgcurv/glinalg.hpp"
#include "ncgcurv/triple.hpp"

namespace ncgcurv {

/// Square m x m table, row-major.
template <typename T>
class Table {
 public:
  Table() = default;
  Table(Index m, const T& fill) : m_(m), data_(static_cast<std::size_t>(m * m), fill) {}

  Index size() const { return m_; }
  T& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(i * m_ + j)]; }
  const T& operator()(Index i, Index j) const { return data_[static_cast<std::size_t>(i * m_ + j)]; }

 private:
  Index m_ = 0;
  std::vector<T> data_;
};

using AlgebraTable = Table<AlgebraElement>;

/// X = p B^m with diagonal grading Gamma, over a finite spectral triple.
///
/// Operators on X (x)_B H are represented on C^m (x) H with generator-major
/// ordering: index (k, h) -> k n + h, so Gamma (x) D is kron(Gamma, D).
class ProjectiveModule {
 public:
  ProjectiveModule() = default;
  ProjectiveModule(SpectralTriple triple, AlgebraTable p, std::vector<int> grading);

  /// p = 1 on B^m.
  static ProjectiveModule free(SpectralTriple triple, std::vector<int> grading);

  const SpectralTriple& triple() const { return triple_; }
  Index generators() const { return p_.size(); }
  /// m n
  Index dim() const { return generators() * triple_.dim(); }
  const AlgebraTable& p() const { return p_; }
  const std::vector<int>& grading_signs() const { return grading_; }

  /// Assembled projection, unchecked; build_projector() checks it.
  const CMatrix& projection() const { return P_; }
  /// Gamma (x) 1
  CMatrix module_grading() const;
  /// Gamma (x) gamma
  CMatrix total_grading() const;
  /// Gamma (x) D, the graded lift of D.
  CMatrix lifted_dirac() const;
  /// 1 (x) D
  CMatrix ungraded_dirac() const;
  /// 1 (x) D^2
  CMatrix lifted_dirac_squared() const;

  CMatrix assemble(const AlgebraTable& t) const;
  /// Inverse of assemble; each block must lie in the algebra.
  AlgebraTable disassemble(const CMatrix& M, double tol = 1e-8) const;

 private:
  SpectralTriple triple_;
  AlgebraTable p_;
  std::vector<int> grading_;
  CMatrix P_;
};

/// Checked assembly of P: P^2 = P, P^* = P and (Gamma (x) 1) P (Gamma (x) 1) = P.
CMatrix build_projector(const ProjectiveModule& module, double tol = 1e-8);

/// Connection one-form A = nabla - nabla^Grassmann, as a table of universal one-forms.
struct UniversalConnectionForm {
  Table<UniversalOneForm> A;
  bool hermitian = false;

  static UniversalConnectionForm zero(Index m, Index d) {
    return UniversalConnectionForm{Table<UniversalOneForm>(m, UniversalOneForm::zero(d)), true};
  }
};

UniversalConnectionForm operator+(const UniversalConnectionForm& a, const UniversalConnectionForm& b);

struct RepresentedConnection {
  CMatrix A_D;   // blocks pi_D(A_kl)
  CMatrix A_D2;  // blocks pi_D2(A_kl)
};

/// Assembled pi_D and pi_D2 images, without invariant checks.
RepresentedConnection assemble_connection(const ProjectiveModule& module, const UniversalConnectionForm& A);

/// As assemble_connection, but throws InvariantError unless A_D is compressed
/// (P A_D P = A_D) and odd for Gamma (x) gamma.
RepresentedConnection represent_connection(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                           double tol = 1e-8);

/// p A p with entries across opposite-Gamma generators removed.
UniversalConnectionForm compress_connection(const ProjectiveModule& module, const UniversalConnectionForm& A);

/// (A + A^dagger) / 2 where (A^dagger)_kl = (A_lk)^*.
UniversalConnectionForm hermitian_part(const ProjectiveModule& module, const UniversalConnectionForm& A);

struct ProductOperator {
  CMatrix mat;
  CMatrix P;
  CMatrix grading;  // Gamma (x) gamma

  double symmetry_residual() const { return (mat - mat.adjoint()).norm(); }
  double oddness_residual() const { return (grading * mat + mat * grading).norm(); }
  double support_residual() const { return (P * mat * P - mat).norm(); }
};

/// P (Gamma (x) D) P
ProductOperator grassmann_product_operator(const ProjectiveModule& module);

/// P (Gamma (x) D) P + A_D
ProductOperator product_operator(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                 double tol = 1e-8);

/// P (1 (x) D^2) P + A_D2
ProductOperator product_operator_sq_lift(const ProjectiveModule& module, const UniversalConnectionForm& A,
                                         double tol = 1e-8);

/// Represented Grassmann connection on the standard frame x_j = p e_j:
/// column block j is sum_i gamma(x_i) [D, <x_i, x_j>], i.e. (Gamma (x) 1) P [1 (x) D, P].
CMatrix grassmann_connection_matrix(const ProjectiveModule& module);

/// Defect of <gamma x_i, nabla x_j> - <nabla gamma x_i, x_j> - [D, <x_i, x_j>],
/// maximised (spectral norm) over frame pairs, with nabla = Grassmann + A.
double hermitian_residual(const ProjectiveModule& module, const UniversalConnectionForm& A);

/// Orthonormal basis (columns) of range(P).
CMatrix range_basis(const CMatrix& P);

/// Eigenvalues of op restricted to range(P), ascending.
std::vector<double> spectrum(const ProductOperator& op, double tol = 1e-8);

}  // namespace ncgcurv
