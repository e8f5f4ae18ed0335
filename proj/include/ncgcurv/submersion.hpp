#pragma once

#include <array>
#include <string>
#include <vector>

namespace ncgcurv::submersion {

/// Dense real 3-index tensor, row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2) : dims_{d0, d1, d2}, data_(static_cast<std::size_t>(d0 * d1 * d2), 0.0) {}

  double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  int dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
  const std::vector<double>& data() const { return data_; }
  double max_abs() const;

 private:
  std::size_t offset(int i, int j, int k) const {
    return static_cast<std::size_t>((i * dims_[1] + j) * dims_[2] + k);
  }
  std::array<int, 3> dims_{0, 0, 0};
  std::vector<double> data_;
};

/// Structure constants of an orthonormal frame at a point: [E_i, E_j] = sum_k c(k, i, j) E_k.
/// Frame indices 0..dim_F-1 are vertical (e_a), dim_F..dim_M-1 horizontal (f_i).
class FramePoint {
 public:
  FramePoint(int dim_M, int dim_F);
  FramePoint(int dim_M, int dim_F, Tensor3 c);

  int dim_M() const { return dim_M_; }
  int dim_F() const { return dim_F_; }
  int dim_H() const { return dim_M_ - dim_F_; }
  int vertical(int a) const { return a; }
  int horizontal(int i) const { return dim_F_ + i; }

  /// Sets c(k, i, j) = value and c(k, j, i) = -value.
  void set_bracket(int i, int j, int k, double value);
  const Tensor3& c() const { return c_; }

  /// max |c(k,i,j) + c(k,j,i)|
  double antisymmetry_residual() const;

 private:
  int dim_M_;
  int dim_F_;
  Tensor3 c_;
};

struct SubmersionInvariants {
  Tensor3 S_pi;                // [a][b][i]
  std::vector<double> k;       // [i]
  Tensor3 Omega;               // [i][j][a]
};

/// S_pi(e_a, e_b, f_i) = -(<[f_i, e_a], e_b> + <[f_i, e_b], e_a>) / 2
Tensor3 second_fundamental_form(const FramePoint& fp);
/// k_i = sum_a S_pi(e_a, e_a, f_i)
std::vector<double> mean_curvature(const FramePoint& fp);
/// Omega(f_i, f_j, e_a) = -<[f_i, f_j], e_a>
Tensor3 fibration_curvature(const FramePoint& fp);

SubmersionInvariants invariants(const FramePoint& fp);

/// max over m of |sum over cyclic (i,j,k) of sum_l c(l,i,j) c(m,l,k)|; zero for Lie algebras.
double jacobi_residual(const FramePoint& fp);

/// Nilpotent frame: dim_M = 3, vertical e, horizontal f1, f2 with [f1, f2] = e.
FramePoint heisenberg();
/// Berger-scaled su(2) frame: [X_i, X_j] = 2 eps_ijk X_k with vertical e = X_3 / lambda.
FramePoint hopf(double lambda = 1.0);
/// Warped torus dt^2 + f(t)^2 ds^2 at a point: vertical e = f^{-1} d_s, horizontal d_t.
FramePoint warped_torus(double f, double f_prime);

/// "heisenberg", "hopf", "warped_torus"; params as documented for each frame.
FramePoint canned_frame(const std::string& name, const std::vector<double>& params);

}  // namespace ncgcurv::submersion
