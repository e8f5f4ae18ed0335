#pragma once

#include <filesystem>
#include <string>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/fgpmod.hpp"
#include "ncgcurv/forms.hpp"
#include "ncgcurv/scenario.hpp"
#include "ncgcurv/triple.hpp"

namespace ncgcurv::test {

inline std::filesystem::path scenario_path(const std::string& name) {
  return std::filesystem::path(NCGCURV_SOURCE_DIR) / "scenarios" / name;
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(NCGCURV_SOURCE_DIR) / "tests" / "fixtures" / name;
}

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline CMatrix diag(std::initializer_list<Complex> entries) {
  CVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (Complex e : entries) v(i++) = e;
  return v.asDiagonal();
}

/// n = 2, gamma = diag(1, -1), basis {1, diag(1, 0)}, D = [[0, 1], [1, 0]].
inline SpectralTriple two_point() {
  const int signs[] = {1, -1};
  return SpectralTriple(Grading::diagonal(signs), {CMatrix::Identity(2, 2), diag({1.0, 0.0})},
                        mat2(0.0, 1.0, 1.0, 0.0));
}

inline AlgebraElement b2(const SpectralTriple& st) { return AlgebraElement::unit(st.algebra_dim(), 1); }

/// p = diag(b2, 1 - b2), Gamma = diag(1, -1).
inline ProjectiveModule two_point_module() {
  const SpectralTriple st = two_point();
  AlgebraTable p(2, AlgebraElement::zero(2));
  p(0, 0) = b2(st);
  p(1, 1) = st.identity() - b2(st);
  return ProjectiveModule(st, p, {1, -1});
}

}  // namespace ncgcurv::test
