#include <doctest.h>

#include "support.hpp"

using namespace ncgcurv;
using namespace ncgcurv::test;

namespace {

ProjectiveModule free_two_point() { return ProjectiveModule::free(two_point(), {1, -1}); }

UniversalConnectionForm delta_connection(const ProjectiveModule& module, Complex c1, Complex c2) {
  const SpectralTriple& st = module.triple();
  UniversalConnectionForm A = UniversalConnectionForm::zero(2, st.algebra_dim());
  A.A(0, 0) = c1 * delta(st, b2(st));
  A.A(1, 1) = c2 * delta(st, b2(st));
  A.hermitian = false;
  return A;
}

}  // namespace

TEST_SUITE("fgpmod") {
  TEST_CASE("projector assembly") {
    CHECK(build_projector(free_two_point()).isIdentity());
    const CMatrix P = build_projector(two_point_module());
    CHECK((P - diag({1.0, 0.0, 0.0, 1.0})).norm() == 0.0);
  }

  TEST_CASE("non-idempotent p is rejected") {
    const SpectralTriple st = two_point();
    AlgebraTable p(1, Complex(2.0) * st.identity());
    CHECK_THROWS_AS(build_projector(ProjectiveModule(st, p, {1})), InvariantError);
  }

  TEST_CASE("odd p is rejected") {
    const SpectralTriple st = two_point();
    AlgebraTable p(2, AlgebraElement::zero(2));
    p(0, 0) = p(0, 1) = p(1, 0) = p(1, 1) = Complex(0.5) * st.identity();
    CHECK_THROWS_AS(build_projector(ProjectiveModule(st, p, {1, -1})), InvariantError);
  }

  TEST_CASE("Grassmann product operator") {
    const ProductOperator free_op = grassmann_product_operator(free_two_point());
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.topLeftCorner(2, 2) = two_point().dirac();
    expected.bottomRightCorner(2, 2) = -two_point().dirac();
    CHECK((free_op.mat - expected).norm() == 0.0);
    const std::vector<double> spec = spectrum(free_op);
    REQUIRE(spec.size() == 4);
    CHECK(spec[0] == doctest::Approx(-1.0));
    CHECK(spec[1] == doctest::Approx(-1.0));
    CHECK(spec[2] == doctest::Approx(1.0));
    CHECK(spec[3] == doctest::Approx(1.0));

    const ProductOperator op = grassmann_product_operator(two_point_module());
    CHECK(op.mat.norm() == 0.0);  // P diag(D, -D) P vanishes: D is off-diagonal.
    CHECK(op.symmetry_residual() == 0.0);
    CHECK(op.oddness_residual() == 0.0);
  }

  TEST_CASE("zero projection gives the zero operator") {
    const SpectralTriple st = two_point();
    const ProjectiveModule zero(st, AlgebraTable(1, AlgebraElement::zero(2)), {1});
    CHECK(grassmann_product_operator(zero).mat.norm() == 0.0);
    CHECK(spectrum(grassmann_product_operator(zero)).empty());
  }

  TEST_CASE("spectrum scales with D") {
    const SpectralTriple st = two_point();
    const SpectralTriple scaled(st.grading(), st.algebra_basis(), 3.0 * st.dirac());
    const std::vector<double> base = spectrum(grassmann_product_operator(ProjectiveModule::free(st, {1, -1})));
    const std::vector<double> big = spectrum(grassmann_product_operator(ProjectiveModule::free(scaled, {1, -1})));
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(big[i] == doctest::Approx(3.0 * base[i]));
  }

  TEST_CASE("represented connection") {
    const ProjectiveModule module = free_two_point();
    const UniversalConnectionForm zero = UniversalConnectionForm::zero(2, 2);
    const RepresentedConnection rz = represent_connection(module, zero);
    CHECK(rz.A_D.norm() == 0.0);
    CHECK(rz.A_D2.norm() == 0.0);

    const RepresentedConnection r = represent_connection(module, delta_connection(module, 1.0, 1.0));
    const CMatrix c = mat2(0.0, -1.0, 1.0, 0.0);
    CHECK((r.A_D.topLeftCorner(2, 2) - c).norm() < 1e-15);
    CHECK((r.A_D.bottomRightCorner(2, 2) - c).norm() < 1e-15);
    CHECK(r.A_D2.norm() == 0.0);  // D^2 = 1
  }

  TEST_CASE("uncompressed connection is rejected") {
    const ProjectiveModule module = two_point_module();
    CHECK_THROWS_AS(represent_connection(module, delta_connection(module, 1.0, 1.0)), InvariantError);
    const UniversalConnectionForm compressed = compress_connection(module, delta_connection(module, 1.0, 1.0));
    CHECK_NOTHROW(represent_connection(module, compressed));
  }

  TEST_CASE("product operator adds the represented connection") {
    const ProjectiveModule module = free_two_point();
    const UniversalConnectionForm A = delta_connection(module, Complex(0.0, 1.0), Complex(0.0, -0.5));
    const ProductOperator M = product_operator(module, A);
    const ProductOperator M0 = grassmann_product_operator(module);
    CHECK((M.mat - M0.mat - represent_connection(module, A).A_D).norm() < 1e-15);
    CHECK(M.symmetry_residual() < 1e-14);
    CHECK(M.oddness_residual() < 1e-14);

    const ProductOperator N = product_operator_sq_lift(module, A);
    CHECK(N.mat.isIdentity());
    const ProductOperator Nm = product_operator_sq_lift(two_point_module(), UniversalConnectionForm::zero(2, 2));
    CHECK((Nm.mat - diag({1.0, 0.0, 0.0, 1.0})).norm() == 0.0);
  }

  TEST_CASE("hermitian residual") {
    const ProjectiveModule module = free_two_point();
    CHECK(hermitian_residual(module, UniversalConnectionForm::zero(2, 2)) < 1e-14);
    CHECK(hermitian_residual(two_point_module(), UniversalConnectionForm::zero(2, 2)) < 1e-14);
    // i delta(b2) represents to a self-adjoint odd operator; delta(b2) alone is skew.
    CHECK(hermitian_residual(module, delta_connection(module, Complex(0.0, 1.0), 0.0)) < 1e-14);
    CHECK(hermitian_residual(module, delta_connection(module, 1.0, 0.0)) > 0.1);
    const UniversalConnectionForm h = hermitian_part(module, delta_connection(module, Complex(1.0, 2.0), -3.0));
    CHECK(hermitian_residual(module, h) < 1e-12);
  }

  TEST_CASE("assemble and disassemble are inverse") {
    const ProjectiveModule module = two_point_module();
    const CMatrix P = module.projection();
    const AlgebraTable t = module.disassemble(P);
    CHECK((module.assemble(t) - P).norm() < 1e-14);
    CHECK_THROWS(module.disassemble(kron(CMatrix::Identity(2, 2), two_point().dirac())));
  }
}
