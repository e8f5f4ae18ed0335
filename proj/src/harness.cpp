#include "ncgcurv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/generator.hpp"

namespace ncgcurv::harness {

namespace {

enum Stream : std::uint64_t {
  kRoute = 1,
  kAjunkie,
  kJunk,
  kCorrespondence,
  kExternal,
  kGrassmann,
  kStructure,
  kHermitian,
  kContainment,
  kGrowth,
};

PropertyResult start(std::string name, int cases, double tol) {
  PropertyResult r;
  r.name = std::move(name);
  r.cases = cases;
  r.tolerance = tol;
  return r;
}

PropertyResult finish(PropertyResult r) {
  r.passed = !r.asserted || r.worst <= r.tolerance;
  return r;
}

ProjectiveModule module_for(gen::Generator& g, const SpectralTriple& st) {
  return gen::random_module(g, st, g.integer(1, 4));
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

PropertyResult route_equality(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("route_equality", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kRoute, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const ProjectiveModule module = module_for(g, st);
    const UniversalConnectionForm A = gen::random_connection(g, module, true);
    const double res = relative_distance(curvature_direct(module, A), curvature_formula(module, A));
    r.worst = std::max(r.worst, res);
  }
  return finish(r);
}

PropertyResult ajunkie_identity(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("ajunkie_identity", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kAjunkie, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const UniversalOneForm w = gen::random_one_form(g, st);
    const double res =
        (two_form_direct(st, w) - two_form_via_anticommutator(st, w)).norm() / two_form_scale(st, w);
    r.worst = std::max(r.worst, res);
  }
  return finish(r);
}

PropertyResult junk_invariance(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("junk_invariance", cases, tol);
  int nontrivial = 0;
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kJunk, static_cast<std::uint64_t>(k));
    // Resample until the two lifts are genuinely distinct.
    for (int attempt = 0;; ++attempt) {
      const SpectralTriple st = gen::random_triple(g, gen::TripleFamily::junk_rich);
      const ProjectiveModule module = module_for(g, st);
      const UniversalConnectionForm A = gen::random_connection(g, module, true);
      const UniversalConnectionForm K = gen::random_kernel_shift(g, module);
      double shift = 0.0;
      for (Index a = 0; a < K.A.size(); ++a)
        for (Index b = 0; b < K.A.size(); ++b) shift = std::max(shift, K.A(a, b).coeffs.norm());
      if (shift < 1e-6 && attempt < 20) continue;
      const UniversalConnectionForm A2 = A + K;
      const CMatrix R1 = curvature_direct(module, A);
      const CMatrix R2 = curvature_direct(module, A2);
      const SubspaceBasis lifted = lifted_junk_space(module, junk_space(st));
      const double coset = junk_coset_residual(R1, R2, lifted);
      const double canon = relative_distance(project_off(R1, lifted), project_off(R2, lifted));
      r.worst = std::max({r.worst, coset, canon});
      if ((R1 - R2).norm() > 1e-8) ++nontrivial;
      break;
    }
  }
  r.detail = std::to_string(nontrivial) + " of " + std::to_string(cases) + " pairs with R1 != R2";
  return finish(r);
}

PropertyResult correspondence_decomposition(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("correspondence_decomposition", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kCorrespondence, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const ProjectiveModule module = module_for(g, st);
    const UniversalConnectionForm A = gen::random_connection(g, module, true);
    const VerticalOperator S = gen::random_vertical(g, module);
    r.worst = std::max(r.worst, correspondence_decomposition_residual(module, A, S));
  }
  return finish(r);
}

PropertyResult external_vanishing(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("external_vanishing", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kExternal, static_cast<std::uint64_t>(k));
    const SpectralTriple st1 = gen::random_triple(g);
    const SpectralTriple st2 = gen::random_triple(g);
    const double scale = std::pow(spectral_norm(st1.dirac()) + spectral_norm(st2.dirac()), 2);
    r.worst = std::max(r.worst, spectral_norm(external_product_defect(st1, st2)) / std::max(scale, 1e-300));
  }
  return finish(r);
}

PropertyResult grassmann_symmetry(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("grassmann_symmetry", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kGrassmann, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const ProjectiveModule module = module_for(g, st);
    const UniversalConnectionForm A = (k % 2 == 0)
                                          ? UniversalConnectionForm::zero(module.generators(), st.algebra_dim())
                                          : gen::random_connection(g, module, true);
    const ProductOperator M = product_operator(module, A);
    const CMatrix& G = M.grading;
    r.worst = std::max({r.worst, spectral_norm(M.mat - M.mat.adjoint()),
                        spectral_norm(G * M.mat + M.mat * G)});
  }
  return finish(r);
}

PropertyResult curvature_structure(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("curvature_structure", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kStructure, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const ProjectiveModule module = module_for(g, st);
    const UniversalConnectionForm A = gen::random_connection(g, module, true);
    const CMatrix R = curvature_direct(module, A);
    const CMatrix G = module.total_grading();
    const CMatrix& P = module.projection();
    r.worst = std::max({r.worst, (G * R * G - R).norm(), (P * R * P - R).norm(), (R - R.adjoint()).norm()});
  }
  return finish(r);
}

PropertyResult hermitian_connection(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("hermitian_connection", cases, tol);
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kHermitian, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g);
    const ProjectiveModule module = module_for(g, st);
    const UniversalConnectionForm A = gen::random_connection(g, module, true);
    r.worst = std::max(r.worst, hermitian_residual(module, A));
  }
  return finish(r);
}

PropertyResult junk_containment(std::uint64_t seed, int cases, double tol) {
  PropertyResult r = start("junk_containment", cases, tol);
  Index total_junk = 0;
  for (int k = 0; k < cases; ++k) {
    gen::Generator g(seed, kContainment, static_cast<std::uint64_t>(k));
    const SpectralTriple st = gen::random_triple(g, k % 2 == 0 ? gen::TripleFamily::junk_rich : gen::TripleFamily::any);
    const FormSpace junk = junk_space(st);
    const FormSpace two = two_form_space(st);
    total_junk += junk.dimension();
    for (const CMatrix& J : junk.basis.elements()) r.worst = std::max(r.worst, membership_residual(J, two.basis));
    const double scale = std::max(1.0, spectral_norm(st.dirac()));
    for (const UniversalOneForm& w : pi_D_kernel(st)) {
      r.worst = std::max(r.worst, pi_D_right(st, w).norm() / scale);
      r.worst = std::max(r.worst, membership_residual(pi_D2(st, w), junk.basis));
    }
  }
  r.detail = "total junk dimension " + std::to_string(total_junk);
  return finish(r);
}

PropertyResult growth_proxy(std::uint64_t seed) {
  PropertyResult r = start("growth_proxy", 4, 0.0);
  r.asserted = false;
  gen::Generator g(seed, kGrowth, 0);
  const SpectralTriple st = gen::random_triple(g, gen::TripleFamily::junk_rich);
  for (Index m = 1; m <= 4; ++m) {
    const ProjectiveModule module = gen::random_module(g, st, m);
    const double norm =
        spectral_norm(curvature_direct(module, UniversalConnectionForm::zero(m, st.algebra_dim())));
    r.series.push_back(norm);
    r.worst = std::max(r.worst, norm);
    r.detail += (m > 1 ? " " : "") + std::string("m=") + std::to_string(m) + ":" + format_double("%.6g", norm);
  }
  // ||P[D~,P]^2 P|| <= ||[D~,P]||^2 <= 4 ||D||^2, whatever the rank.
  r.detail += "; bound 4||D||^2 = " + format_double("%.6g", 4.0 * std::pow(spectral_norm(st.dirac()), 2));
  return finish(r);
}

std::vector<PropertyResult> full_suite(std::uint64_t seed) {
  return {route_equality(seed),        ajunkie_identity(seed),   junk_invariance(seed),
          correspondence_decomposition(seed), external_vanishing(seed), grassmann_symmetry(seed),
          curvature_structure(seed),   hermitian_connection(seed), junk_containment(seed),
          growth_proxy(seed)};
}

}  // namespace ncgcurv::harness
