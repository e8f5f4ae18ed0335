#include <doctest.h>

#include "ncgcurv/glinalg.hpp"
#include "support.hpp"

using namespace ncgcurv;
using ncgcurv::test::diag;
using ncgcurv::test::mat2;

namespace {
const Complex I(0.0, 1.0);
}

TEST_SUITE("glinalg") {
  TEST_CASE("adjoint is the conjugate transpose") {
    CHECK(adjoint(CMatrix::Identity(3, 3)).isApprox(CMatrix::Identity(3, 3)));
    CHECK((adjoint(mat2(0.0, I, 0.0, 0.0)) - mat2(0.0, 0.0, -I, 0.0)).norm() == 0.0);
    const CMatrix D = mat2(0.0, 1.0, 1.0, 0.0);
    CHECK((adjoint(D) - D).norm() == 0.0);
  }

  TEST_CASE("graded commutator signs") {
    const CMatrix D = mat2(0.0, 1.0, 1.0, 0.0);
    CHECK(graded_commutator({D, Parity::odd}, {CMatrix::Identity(2, 2), Parity::even}).norm() == 0.0);

    const CMatrix J = mat2(0.0, -1.0, 1.0, 0.0);
    CHECK((graded_commutator({J, Parity::odd}, {J, Parity::odd}) - diag({-2.0, -2.0})).norm() < 1e-15);

    const CMatrix a = mat2(1.0, 2.0, 0.0, 3.0);
    const CMatrix b = mat2(0.0, 1.0, I, 0.0);
    CHECK((graded_commutator({a, Parity::even}, {b, Parity::even}) - (a * b - b * a)).norm() == 0.0);
  }

  TEST_CASE("graded right lift") {
    const int signs[] = {1, -1};
    const Grading g = Grading::diagonal(signs);
    const CMatrix b = mat2(1.0, 2.0, 3.0, 4.0);
    CHECK((graded_right_lift({b, Parity::even}, g) - kron(CMatrix::Identity(2, 2), b)).norm() == 0.0);

    const CMatrix D2 = mat2(0.0, -I, I, 0.0);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.topLeftCorner(2, 2) = D2;
    expected.bottomRightCorner(2, 2) = -D2;
    CHECK((graded_right_lift({D2, Parity::odd}, g) - expected).norm() == 0.0);

    CHECK(graded_right_lift({CMatrix::Identity(2, 2), Parity::even}, g).isIdentity());
  }

  TEST_CASE("spectral norm") {
    CHECK(spectral_norm(CMatrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(spectral_norm(diag({3.0, -4.0 * I})) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(spectral_norm(mat2(0.0, -1.0, 1.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("subspace basis ranks") {
    const CMatrix M = mat2(1.0, I, 0.0, 2.0);
    const std::vector<CMatrix> collinear{M, 2.0 * M};
    CHECK(subspace_basis(collinear).dimension() == 1);

    const std::vector<CMatrix> zero{CMatrix::Zero(2, 2)};
    CHECK(subspace_basis(zero).dimension() == 0);

    // b1 [D, b2] and b2 [D, b2] in the two-point triple.
    const CMatrix D = mat2(0.0, 1.0, 1.0, 0.0);
    const CMatrix b2 = diag({1.0, 0.0});
    const CMatrix c = D * b2 - b2 * D;
    const std::vector<CMatrix> forms{c, b2 * c};
    const SubspaceBasis basis = subspace_basis(forms);
    REQUIRE(basis.dimension() == 2);
    CHECK((basis.columns().adjoint() * basis.columns() - CMatrix::Identity(2, 2)).norm() < 1e-12);
  }

  TEST_CASE("membership residual") {
    const std::vector<CMatrix> diagonal{diag({1.0, 0.0}), diag({0.0, 1.0})};
    const SubspaceBasis basis = subspace_basis(diagonal);
    CHECK(membership_residual(diag({2.0, -I}), basis) <= 1e-12);

    const CMatrix off = mat2(0.0, 3.0, 4.0, 0.0);
    CHECK(membership_residual(off, basis) == doctest::Approx(off.norm() / std::max(1.0, off.norm())));
    const CMatrix small = mat2(0.0, 0.3, 0.0, 0.0);
    CHECK(membership_residual(small, basis) == doctest::Approx(0.3));

    std::vector<CMatrix> units;
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        CMatrix E = CMatrix::Zero(2, 2);
        E(i, j) = 1.0;
        units.push_back(E);
      }
    CHECK(membership_residual(mat2(0.3 + I, -2.0, 0.7, 5.0 * I), subspace_basis(units)) <= 1e-12);
  }

  TEST_CASE("kernel solver") {
    CHECK(solve_kernel(CMatrix::Identity(3, 3)).empty());
    CHECK(solve_kernel(CMatrix::Zero(3, 4)).size() == 4);

    CVector u(3), v(3);
    u << 1.0, 2.0, 3.0;
    v << 1.0, -1.0, 0.5;
    const CMatrix rank_one = u * v.transpose();
    const auto kernel = solve_kernel(rank_one);
    REQUIRE(kernel.size() == 2);
    for (const CVector& k : kernel) {
      CHECK((rank_one * k).norm() < 1e-12);
      CHECK(k.norm() == doctest::Approx(1.0));
    }
    CHECK(std::abs(kernel[0].dot(kernel[1])) < 1e-12);
  }

  TEST_CASE("kernel solver with repeated singular values") {
    // Two equal singular values and a zero block: the case that needs a full, accurate V.
    CMatrix L = CMatrix::Zero(4, 4);
    L(0, 0) = 1.0;
    L(1, 1) = 1.0;
    const auto kernel = solve_kernel(L);
    REQUIRE(kernel.size() == 2);
    for (const CVector& k : kernel) CHECK((L * k).norm() < 1e-14);
  }

  TEST_CASE("vectorize round trip") {
    const CMatrix a = mat2(1.0, 2.0, 3.0, I);
    const CVector v = vectorize(a);
    CHECK(v(1) == Complex(3.0));
    CHECK((unvectorize(v, 2, 2) - a).norm() == 0.0);
  }

  TEST_CASE("grading invariants") {
    const int signs[] = {1, -1, 1};
    const Grading g = Grading::diagonal(signs);
    CHECK(g.involution_residual() == 0.0);
    CHECK(g.adjoint_residual() == 0.0);
    CHECK(g.parity_residual(CMatrix::Identity(3, 3), Parity::even) == 0.0);
    CHECK(g.parity_residual(CMatrix::Identity(3, 3), Parity::odd) > 1.0);
  }
}
