#include <doctest.h>

#include <stdexcept>

#include "ncgcurv/submersion.hpp"

using namespace ncgcurv::submersion;

TEST_SUITE("submersion") {
  TEST_CASE("Heisenberg frame") {
    const FramePoint fp = heisenberg();
    CHECK(fp.dim_M() == 3);
    CHECK(fp.dim_F() == 1);
    CHECK(fp.c()(0, 1, 2) == 1.0);
    CHECK(fp.c()(0, 2, 1) == -1.0);
    const SubmersionInvariants inv = invariants(fp);
    CHECK(inv.S_pi.max_abs() <= 1e-12);
    for (double k : inv.k) CHECK(std::abs(k) <= 1e-12);
    CHECK(std::abs(inv.Omega(0, 1, 0) + 1.0) <= 1e-12);
    CHECK(std::abs(inv.Omega(1, 0, 0) - 1.0) <= 1e-12);
    CHECK(inv.Omega(0, 0, 0) == 0.0);
    CHECK(inv.Omega(1, 1, 0) == 0.0);
    CHECK(jacobi_residual(fp) <= 1e-12);
  }

  TEST_CASE("Hopf frame") {
    const SubmersionInvariants inv = invariants(hopf(1.0));
    CHECK(inv.S_pi.max_abs() <= 1e-12);
    CHECK(std::abs(inv.Omega(0, 1, 0) + 2.0) <= 1e-12);
    CHECK(jacobi_residual(hopf(1.0)) <= 1e-12);

    const SubmersionInvariants berger = invariants(hopf(0.5));
    CHECK(berger.S_pi.max_abs() <= 1e-12);
    CHECK(std::abs(berger.Omega(0, 1, 0) + 1.0) <= 1e-12);
    CHECK(jacobi_residual(hopf(0.5)) <= 1e-12);
  }

  TEST_CASE("warped torus") {
    const FramePoint fp = warped_torus(2.0, 1.0);
    CHECK(fp.c()(0, 1, 0) == doctest::Approx(-0.5));
    const SubmersionInvariants inv = invariants(fp);
    CHECK(std::abs(inv.S_pi(0, 0, 0) - 0.5) <= 1e-12);
    REQUIRE(inv.k.size() == 1);
    CHECK(std::abs(inv.k[0] - 0.5) <= 1e-12);
    CHECK(inv.Omega.max_abs() == 0.0);
  }

  TEST_CASE("mean curvature is linear in the structure constants") {
    FramePoint fp(2, 1);
    fp.set_bracket(1, 0, 0, -0.5);
    FramePoint doubled(2, 1);
    doubled.set_bracket(1, 0, 0, -1.0);
    CHECK(mean_curvature(doubled)[0] == doctest::Approx(2.0 * mean_curvature(fp)[0]).epsilon(1e-12));
  }

  TEST_CASE("flat product torus") {
    const FramePoint fp(3, 1);
    const SubmersionInvariants inv = invariants(fp);
    CHECK(inv.S_pi.max_abs() == 0.0);
    CHECK(inv.Omega.max_abs() == 0.0);
  }

  TEST_CASE("symmetries of the invariants") {
    // A frame with two vertical directions and generic brackets.
    FramePoint fp(4, 2);
    fp.set_bracket(2, 0, 1, 0.3);
    fp.set_bracket(2, 0, 0, -0.7);
    fp.set_bracket(3, 1, 0, 1.1);
    fp.set_bracket(2, 3, 1, 0.4);
    fp.set_bracket(2, 3, 0, -0.2);
    const SubmersionInvariants inv = invariants(fp);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i) CHECK(inv.S_pi(a, b, i) == doctest::Approx(inv.S_pi(b, a, i)).epsilon(1e-12));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a) CHECK(inv.Omega(i, j, a) == doctest::Approx(-inv.Omega(j, i, a)).epsilon(1e-12));
    CHECK(fp.antisymmetry_residual() == 0.0);
  }

  TEST_CASE("canned frame catalog") {
    CHECK(canned_frame("heisenberg", {}).dim_M() == 3);
    CHECK(canned_frame("hopf", {}).dim_F() == 1);
    CHECK(canned_frame("warped_torus", {2.0, 1.0}).dim_M() == 2);
    CHECK_THROWS_AS(canned_frame("hopf", {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(canned_frame("warped_torus", {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(canned_frame("klein", {}), std::invalid_argument);
  }
}
