#pragma once

#include <cstdint>
#include <random>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/fgpmod.hpp"
#include "ncgcurv/forms.hpp"
#include "ncgcurv/triple.hpp"

namespace ncgcurv::gen {

/// Random source for reproducible scenarios. Streams are keyed by
/// (seed, stream, index) so each property case is independent of the others.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

  /// Uniform in the closed complex unit disc.
  Complex disc();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  CMatrix disc_matrix(Index rows, Index cols);

 private:
  std::mt19937_64 rng_;
};

/// Algebra families:
///   commutative: {1, Q_1, ..., Q_{d-1}} for a partition into even index classes.
///   junk_rich:   commutative with every class inside one gamma-eigenspace, so
///                Q_i D Q_j vanishes for classes sharing a sign and junk appears.
///   matrix:      1_2 (x) M_2 on C^4.
/// In every family the basis is conjugated by a random gamma-commuting unitary,
/// gamma = diag(+1, ..., -1, ...) with an even split and D = [[0, X], [X^*, 0]].
enum class TripleFamily { commutative, junk_rich, matrix, any };

SpectralTriple random_triple(Generator& g, TripleFamily family = TripleFamily::any);

/// Dirac operator on a fixed algebra, resampled from the generator.
SpectralTriple with_random_dirac(Generator& g, const SpectralTriple& st);

AlgebraElement random_element(Generator& g, const SpectralTriple& st);

/// sum over two terms of a delta(b) with random a, b.
UniversalOneForm random_one_form(Generator& g, const SpectralTriple& st);

/// p = spectral projection onto the positive part of a random Gamma-even
/// self-adjoint H in M_m(B); resampled until the gap |lambda| >= 1e-3 and p != 0.
ProjectiveModule random_module(Generator& g, const SpectralTriple& st, Index m);

/// Compressed random connection form, passed through hermitian_part when requested.
UniversalConnectionForm random_connection(Generator& g, const ProjectiveModule& module, bool hermitian);

/// Compressed self-adjoint operator with entries only between opposite-Gamma generators.
VerticalOperator random_vertical(Generator& g, const ProjectiveModule& module);

/// Compressed Hermitian form with every entry in ker m cap ker pi_D; zero when that kernel is trivial.
UniversalConnectionForm random_kernel_shift(Generator& g, const ProjectiveModule& module,
                                            double rank_tol = kDefaultRankTol);

}  // namespace ncgcurv::gen
