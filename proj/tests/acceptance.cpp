// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any asserted criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/harness.hpp"
#include "ncgcurv/scenario.hpp"
#include "ncgcurv/submersion.hpp"

using namespace ncgcurv;

namespace {

struct Line {
  int id;
  bool asserted;
  bool passed;
  std::string text;
};

std::vector<Line> lines;

void record(int id, bool passed, std::string text, bool asserted = true) {
  lines.push_back({id, asserted, passed, std::move(text)});
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Scenario load(const std::string& name) {
  return parse_scenario(std::filesystem::path(NCGCURV_SOURCE_DIR) / "scenarios" / name);
}

void route_equality(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const harness::PropertyResult r = harness::route_equality(seed, 200, 1e-9);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  record(1, r.passed && secs < 60.0,
         "route equality: 200 cases, worst relative residual " + fmt("%.3g", r.worst) + " <= 1e-9, runtime " +
             fmt("%.2f", secs) + " s < 60 s");
}

void ajunkie(std::uint64_t seed) {
  const harness::PropertyResult r = harness::ajunkie_identity(seed, 200, 1e-9);
  record(2, r.passed, "two-form identity: 200 one-forms, worst scaled residual " + fmt("%.3g", r.worst) + " <= 1e-9");
}

void junk_invariance(std::uint64_t seed) {
  const harness::PropertyResult r = harness::junk_invariance(seed, 50, 1e-8);
  record(3, r.passed,
         "junk invariance: 50 lift pairs (" + r.detail + "), worst coset/canonical residual " + fmt("%.3g", r.worst) +
             " <= 1e-8");
}

void correspondence(std::uint64_t seed) {
  const harness::PropertyResult r = harness::correspondence_decomposition(seed, 100, 1e-10);
  record(4, r.passed, "correspondence decomposition: 100 (A, S) pairs, worst " + fmt("%.3g", r.worst) + " <= 1e-10");
}

void external(std::uint64_t seed) {
  const harness::PropertyResult r = harness::external_vanishing(seed, 20, 1e-12);
  const Scenario sc = load("two_point_pair.json");
  const double control = spectral_norm(ungraded_external_defect(*sc.triple, *sc.second_triple));
  const double fixture = spectral_norm(external_product_defect(*sc.triple, *sc.second_triple));
  record(5, r.passed && control >= 0.01 && fixture <= 1e-12,
         "external product: 20 pairs, worst relative defect " + fmt("%.3g", r.worst) +
             " <= 1e-12; fixture defect " + fmt("%.3g", fixture) + ", ungraded control " + fmt("%.6g", control) +
             " >= 0.01");
}

void two_point() {
  const Scenario tp = load("two_point.json");
  const Index o1 = one_form_space(*tp.triple).dimension();
  const Index o2 = two_form_space(*tp.triple).dimension();
  const Index j2 = junk_space(*tp.triple).dimension();

  const Scenario pm = load("two_point_module.json");
  const ProjectiveModule& module = *pm.module;
  const CMatrix R = curvature_direct(module, UniversalConnectionForm::zero(module.generators(), 2));
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = -1.0;
  expected(3, 3) = -1.0;
  const double diff = (R - expected).norm();
  const double norm = spectral_norm(R);
  const bool ok = o1 == 2 && o2 == 2 && j2 == 0 && diff <= 1e-10 && std::abs(norm - 1.0) <= 1e-10;
  record(6, ok,
         "two-point fixture: dim Omega^1 = " + std::to_string(o1) + ", dim Omega^2 = " + std::to_string(o2) +
             ", dim J^2 = " + std::to_string(j2) + "; ||R - diag(-1,0,0,-1)||_F = " + fmt("%.3g", diff) +
             ", ||R|| = " + fmt("%.17g", norm));
}

void grassmann(std::uint64_t seed) {
  const harness::PropertyResult r = harness::grassmann_symmetry(seed, 100, 1e-10);
  double worst = 0.0;
  int fixtures = 0;
  const std::filesystem::path dir = std::filesystem::path(NCGCURV_SOURCE_DIR) / "scenarios";
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const Scenario sc = parse_scenario(path);
    if (!sc.module) continue;
    const UniversalConnectionForm A =
        sc.connection ? *sc.connection
                      : UniversalConnectionForm::zero(sc.module->generators(), sc.module->triple().algebra_dim());
    for (const UniversalConnectionForm& conn :
         {UniversalConnectionForm::zero(sc.module->generators(), sc.module->triple().algebra_dim()), A}) {
      const ProductOperator M = product_operator(*sc.module, conn);
      worst = std::max({worst, spectral_norm(M.mat - M.mat.adjoint()),
                        spectral_norm(M.grading * M.mat + M.mat * M.grading)});
    }
    ++fixtures;
  }
  record(7, r.passed && worst <= 1e-10 && fixtures > 0,
         "Grassmann symmetry: " + std::to_string(fixtures) + " module fixtures (worst " + fmt("%.3g", worst) +
             ") and 100 seeded modules (worst " + fmt("%.3g", r.worst) + "), tolerance 1e-10");
}

void submersion_values() {
  using namespace ncgcurv::submersion;
  const SubmersionInvariants h = invariants(heisenberg());
  double hk = 0.0;
  for (double k : h.k) hk = std::max(hk, std::abs(k));
  const bool heis = h.S_pi.max_abs() <= 1e-12 && hk <= 1e-12 && std::abs(h.Omega(0, 1, 0) + 1.0) <= 1e-12;

  const SubmersionInvariants s = invariants(hopf(1.0));
  const bool hopf_ok = s.S_pi.max_abs() <= 1e-12 && std::abs(s.Omega(0, 1, 0) + 2.0) <= 1e-12;

  const SubmersionInvariants w = invariants(warped_torus(2.0, 1.0));
  const bool warped = std::abs(w.k[0] - 0.5) <= 1e-12;

  const double jac = std::max({jacobi_residual(heisenberg()), jacobi_residual(hopf(1.0)),
                               jacobi_residual(warped_torus(2.0, 1.0))});
  record(8, heis && hopf_ok && warped && jac <= 1e-12,
         "submersion: heisenberg (S, k, Omega_120) = (" + fmt("%g", h.S_pi.max_abs()) + ", " + fmt("%g", hk) + ", " +
             fmt("%g", h.Omega(0, 1, 0)) + "); hopf(1) Omega_120 = " + fmt("%g", s.Omega(0, 1, 0)) +
             ", max|S| = " + fmt("%g", s.S_pi.max_abs()) + "; warped_torus(2,1) k = " + fmt("%.17g", w.k[0]) +
             "; Jacobi residual " + fmt("%g", jac));
}

void growth(std::uint64_t seed) {
  const harness::PropertyResult r = harness::growth_proxy(seed);
  record(9, true, "growth proxy (excluded; reported only): ||R|| over rank m = 1..4: " + r.detail, false);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::stoull(argv[1]);
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

  route_equality(seed);
  ajunkie(seed);
  junk_invariance(seed);
  correspondence(seed);
  external(seed);
  two_point();
  grassmann(seed);
  submersion_values();
  growth(seed);

  int failed = 0;
  for (const Line& l : lines) {
    const char* tag = !l.asserted ? "REPORT" : l.passed ? "PASS" : "FAIL";
    std::printf("[%s] criterion %d: %s\n", tag, l.id, l.text.c_str());
    if (l.asserted && !l.passed) ++failed;
  }
  std::printf("%d of %zu asserted criteria failed\n", failed, lines.size() - 1);
  return failed == 0 ? 0 : 1;
}
