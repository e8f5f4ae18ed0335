#include "ncgcurv/generator.hpp"

#include <algorithm>
#include <numeric>

namespace ncgcurv::gen {

namespace {

CMatrix random_unitary(Generator& g, Index k) {
  if (k == 0) return CMatrix(0, 0);
  Eigen::HouseholderQR<CMatrix> qr(g.disc_matrix(k, k));
  CMatrix Q = qr.householderQ();
  return Q;
}

std::vector<int> even_split(Index n) {
  std::vector<int> signs(static_cast<std::size_t>(n), -1);
  std::fill(signs.begin(), signs.begin() + n / 2, 1);
  return signs;
}

CMatrix indicator(Index n, const std::vector<int>& cls, int c) {
  CMatrix Q = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (cls[static_cast<std::size_t>(i)] == c) Q(i, i) = 1.0;
  return Q;
}

/// Assigns indices [begin, end) to classes [first, first + count), each class nonempty.
void assign_classes(Generator& g, std::vector<int>& cls, int begin, int end, int first, int count) {
  std::vector<int> idx(static_cast<std::size_t>(end - begin));
  std::iota(idx.begin(), idx.end(), begin);
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[static_cast<std::size_t>(g.integer(0, int(i) - 1))]);
  for (std::size_t i = 0; i < idx.size(); ++i)
    cls[static_cast<std::size_t>(idx[i])] = first + (int(i) < count ? int(i) : g.integer(0, count - 1));
}

SpectralTriple assemble_triple(Generator& g, const std::vector<int>& signs, std::vector<CMatrix> basis) {
  const Index n = static_cast<Index>(signs.size());
  const Index half = n / 2;
  CMatrix U = CMatrix::Zero(n, n);
  U.topLeftCorner(half, half) = random_unitary(g, half);
  U.bottomRightCorner(n - half, n - half) = random_unitary(g, n - half);
  for (CMatrix& b : basis) b = U * b * U.adjoint();
  basis.front() = CMatrix::Identity(n, n);
  SpectralTriple skeleton(Grading::diagonal(signs), basis, CMatrix::Zero(n, n));
  return with_random_dirac(g, skeleton);
}

}  // namespace

Generator::Generator(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  rng_.seed(seq);
}

Complex Generator::disc() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng_));
  const double t = 2.0 * 3.14159265358979323846 * u(rng_);
  return std::polar(r, t);
}

double Generator::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng_);
}

int Generator::integer(int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  return u(rng_);
}

CMatrix Generator::disc_matrix(Index rows, Index cols) {
  CMatrix M(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) M(i, j) = disc();
  return M;
}

SpectralTriple random_triple(Generator& g, TripleFamily family) {
  if (family == TripleFamily::any) {
    const int pick = g.integer(0, 9);
    family = pick < 4 ? TripleFamily::commutative : pick < 7 ? TripleFamily::junk_rich : TripleFamily::matrix;
  }

  if (family == TripleFamily::matrix) {
    const std::vector<int> signs = even_split(4);
    std::vector<CMatrix> basis;
    const CMatrix I2 = CMatrix::Identity(2, 2);
    for (auto [r, c] : {std::pair{-1, -1}, {0, 0}, {0, 1}, {1, 0}}) {
      CMatrix E = CMatrix::Identity(2, 2);
      if (r >= 0) {
        E.setZero();
        E(r, c) = 1.0;
      }
      basis.push_back(kron(I2, E));
    }
    return assemble_triple(g, signs, std::move(basis));
  }

  std::vector<int> cls;
  Index n = 0;
  int d = 0;
  if (family == TripleFamily::commutative) {
    n = 2 * g.integer(1, 3);
    d = g.integer(1, static_cast<int>(std::min<Index>(4, n)));
    cls.assign(static_cast<std::size_t>(n), 0);
    assign_classes(g, cls, 0, static_cast<int>(n), 0, d);
  } else {
    n = 2 * g.integer(2, 3);
    const int half = static_cast<int>(n / 2);
    d = g.integer(3, 4);
    const int plus = g.integer(std::max(1, d - half), std::min(half, d - 1));
    cls.assign(static_cast<std::size_t>(n), 0);
    assign_classes(g, cls, 0, half, 0, plus);
    assign_classes(g, cls, half, static_cast<int>(n), plus, d - plus);
  }
  std::vector<CMatrix> basis{CMatrix::Identity(n, n)};
  for (int c = 1; c < d; ++c) basis.push_back(indicator(n, cls, c));
  return assemble_triple(g, even_split(n), std::move(basis));
}

SpectralTriple with_random_dirac(Generator& g, const SpectralTriple& st) {
  const Index n = st.dim();
  const CMatrix Y = g.disc_matrix(n, n);
  const CMatrix H = 0.5 * (Y + Y.adjoint());
  const CMatrix& gamma = st.gamma();
  const CMatrix D = 0.5 * (H - gamma * H * gamma);
  return SpectralTriple(st.grading(), st.algebra_basis(), D);
}

AlgebraElement random_element(Generator& g, const SpectralTriple& st) {
  return AlgebraElement(g.disc_matrix(st.algebra_dim(), 1).col(0));
}

UniversalOneForm random_one_form(Generator& g, const SpectralTriple& st) {
  UniversalOneForm w = UniversalOneForm::zero(st.algebra_dim());
  for (int t = 0; t < 2; ++t) w = w + left_mult(st, random_element(g, st), delta(st, random_element(g, st)));
  return w;
}

ProjectiveModule random_module(Generator& g, const SpectralTriple& st, Index m) {
  std::vector<int> signs(static_cast<std::size_t>(m));
  for (int& s : signs) s = g.coin() ? 1 : -1;
  const ProjectiveModule free = ProjectiveModule::free(st, signs);
  const Index d = st.algebra_dim();

  for (int attempt = 0; attempt < 200; ++attempt) {
    AlgebraTable h(m, AlgebraElement::zero(d));
    for (Index k = 0; k < m; ++k)
      for (Index l = 0; l < m; ++l)
        if (signs[static_cast<std::size_t>(k)] == signs[static_cast<std::size_t>(l)]) h(k, l) = random_element(g, st);
    CMatrix H = free.assemble(h);
    H = (0.5 * (H + H.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    const auto& ev = es.eigenvalues();
    if (ev.cwiseAbs().minCoeff() < 1e-3) continue;
    CMatrix P = CMatrix::Zero(H.rows(), H.cols());
    for (Index i = 0; i < ev.size(); ++i)
      if (ev(i) > 0.0) P += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    if (P.norm() < 0.5) continue;
    return ProjectiveModule(st, free.disassemble(P), signs);
  }
  throw InvariantError("random_module: no projection with a spectral gap found", 0.0);
}

UniversalConnectionForm random_connection(Generator& g, const ProjectiveModule& module, bool hermitian) {
  const Index m = module.generators();
  const SpectralTriple& st = module.triple();
  UniversalConnectionForm A = UniversalConnectionForm::zero(m, st.algebra_dim());
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) A.A(k, l) = random_one_form(g, st);
  A = compress_connection(module, A);
  if (hermitian) return hermitian_part(module, A);
  A.hermitian = false;
  return A;
}

VerticalOperator random_vertical(Generator& g, const ProjectiveModule& module) {
  const Index m = module.generators();
  const SpectralTriple& st = module.triple();
  const auto& signs = module.grading_signs();
  AlgebraTable s(m, AlgebraElement::zero(st.algebra_dim()));
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l)
      if (signs[static_cast<std::size_t>(k)] != signs[static_cast<std::size_t>(l)]) s(k, l) = random_element(g, st);
  const CMatrix& P = module.projection();
  CMatrix S = P * module.assemble(s) * P;
  S = (0.5 * (S + S.adjoint())).eval();
  return VerticalOperator{module.disassemble(S)};
}

UniversalConnectionForm random_kernel_shift(Generator& g, const ProjectiveModule& module, double rank_tol) {
  const Index m = module.generators();
  const SpectralTriple& st = module.triple();
  UniversalConnectionForm K = UniversalConnectionForm::zero(m, st.algebra_dim());
  const std::vector<UniversalOneForm> kernel = pi_D_kernel(st, rank_tol);
  if (kernel.empty()) return K;
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l)
      for (const UniversalOneForm& w : kernel) K.A(k, l) = K.A(k, l) + g.disc() * w;
  return hermitian_part(module, compress_connection(module, K));
}

}  // namespace ncgcurv::gen
