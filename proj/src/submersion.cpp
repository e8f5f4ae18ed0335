#include "ncgcurv/submersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncgcurv::submersion {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

FramePoint::FramePoint(int dim_M, int dim_F) : FramePoint(dim_M, dim_F, Tensor3(dim_M, dim_M, dim_M)) {}

FramePoint::FramePoint(int dim_M, int dim_F, Tensor3 c) : dim_M_(dim_M), dim_F_(dim_F), c_(std::move(c)) {
  if (!(0 < dim_F && dim_F < dim_M)) throw std::invalid_argument("frame point needs 0 < dim_F < dim_M");
  if (c_.dim(0) != dim_M || c_.dim(1) != dim_M || c_.dim(2) != dim_M)
    throw std::invalid_argument("structure constants must be dim_M x dim_M x dim_M");
}

void FramePoint::set_bracket(int i, int j, int k, double value) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_M_ || j >= dim_M_ || k >= dim_M_)
    throw std::out_of_range("bracket index out of range");
  if (i == j && value != 0.0) throw std::invalid_argument("[E_i, E_i] must vanish");
  c_(k, i, j) = value;
  c_(k, j, i) = -value;
}

double FramePoint::antisymmetry_residual() const {
  double r = 0.0;
  for (int k = 0; k < dim_M_; ++k)
    for (int i = 0; i < dim_M_; ++i)
      for (int j = 0; j < dim_M_; ++j) r = std::max(r, std::abs(c_(k, i, j) + c_(k, j, i)));
  return r;
}

Tensor3 second_fundamental_form(const FramePoint& fp) {
  const int F = fp.dim_F();
  const int H = fp.dim_H();
  const Tensor3& c = fp.c();
  Tensor3 S(F, F, H);
  for (int a = 0; a < F; ++a)
    for (int b = 0; b < F; ++b)
      for (int i = 0; i < H; ++i) {
        const int fi = fp.horizontal(i);
        // <[f_i, e_a], e_b> is the e_b component of the bracket.
        S(a, b, i) = -0.5 * (c(fp.vertical(b), fi, fp.vertical(a)) + c(fp.vertical(a), fi, fp.vertical(b))) + 0.0;
      }
  return S;
}

std::vector<double> mean_curvature(const FramePoint& fp) {
  const Tensor3 S = second_fundamental_form(fp);
  std::vector<double> k(static_cast<std::size_t>(fp.dim_H()), 0.0);
  for (int i = 0; i < fp.dim_H(); ++i)
    for (int a = 0; a < fp.dim_F(); ++a) k[static_cast<std::size_t>(i)] += S(a, a, i);
  return k;
}

Tensor3 fibration_curvature(const FramePoint& fp) {
  const int F = fp.dim_F();
  const int H = fp.dim_H();
  Tensor3 Omega(H, H, F);
  for (int i = 0; i < H; ++i)
    for (int j = 0; j < H; ++j)
      for (int a = 0; a < F; ++a) Omega(i, j, a) = 0.0 - fp.c()(fp.vertical(a), fp.horizontal(i), fp.horizontal(j));
  return Omega;
}

SubmersionInvariants invariants(const FramePoint& fp) {
  return {second_fundamental_form(fp), mean_curvature(fp), fibration_curvature(fp)};
}

double jacobi_residual(const FramePoint& fp) {
  const int n = fp.dim_M();
  const Tensor3& c = fp.c();
  // [[E_i,E_j],E_k] = sum_l c(l,i,j) sum_m c(m,l,k) E_m
  auto term = [&](int i, int j, int k, int m) {
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += c(l, i, j) * c(m, l, k);
    return s;
  };
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
          worst = std::max(worst, std::abs(term(i, j, k, m) + term(j, k, i, m) + term(k, i, j, m)));
  return worst;
}

FramePoint heisenberg() {
  FramePoint fp(3, 1);
  fp.set_bracket(1, 2, 0, 1.0);
  return fp;
}

FramePoint hopf(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("hopf: lambda must be positive");
  // e = X3 / lambda, f1 = X1, f2 = X2.
  FramePoint fp(3, 1);
  fp.set_bracket(1, 2, 0, 2.0 * lambda);  // [X1, X2] = 2 X3 = 2 lambda e
  fp.set_bracket(2, 0, 1, 2.0 / lambda);  // [X2, e] = 2 X1 / lambda
  fp.set_bracket(0, 1, 2, 2.0 / lambda);  // [e, X1] = 2 X2 / lambda
  return fp;
}

FramePoint warped_torus(double f, double f_prime) {
  if (!(f > 0.0)) throw std::invalid_argument("warped_torus: f must be positive");
  FramePoint fp(2, 1);
  fp.set_bracket(1, 0, 0, -f_prime / f);  // [d_t, f^{-1} d_s] = -(f'/f) e
  return fp;
}

FramePoint canned_frame(const std::string& name, const std::vector<double>& params) {
  if (name == "heisenberg") {
    if (!params.empty()) throw std::invalid_argument("heisenberg takes no parameters");
    return heisenberg();
  }
  if (name == "hopf") {
    if (params.size() > 1) throw std::invalid_argument("hopf takes at most one parameter (lambda)");
    return hopf(params.empty() ? 1.0 : params[0]);
  }
  if (name == "warped_torus") {
    if (params.size() != 2) throw std::invalid_argument("warped_torus takes two parameters (f, f')");
    return warped_torus(params[0], params[1]);
  }
  throw std::invalid_argument("unknown canned frame '" + name + "'");
}

}  // namespace ncgcurv::submersion
