#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncgcurv::harness {

/// Outcome of one seeded property over many generated cases.
struct PropertyResult {
  std::string name;
  int cases = 0;
  double worst = 0.0;      // largest residual seen
  double tolerance = 0.0;
  bool passed = false;
  bool asserted = true;    // false for report-only properties
  std::string detail;
  std::vector<double> series;
};

/// Relative distance between the two curvature routes, Hermitian A.
PropertyResult route_equality(std::uint64_t seed, int cases = 200, double tol = 1e-9);

/// || sum c_ij [D,b_i][D,b_j] - ({D, pi_D(w)} - pi_D2(w)) ||_F / two_form_scale.
PropertyResult ajunkie_identity(std::uint64_t seed, int cases = 200, double tol = 1e-9);

/// Two lifts A and A + K with pi_D(K) = 0: coset residual and canonical representatives.
PropertyResult junk_invariance(std::uint64_t seed, int cases = 50, double tol = 1e-8);

/// || R_(S,nabla) - R_nabla - {S~, M} ||_F
PropertyResult correspondence_decomposition(std::uint64_t seed, int cases = 100, double tol = 1e-10);

/// ||external defect|| / (||D1|| + ||D2||)^2
PropertyResult external_vanishing(std::uint64_t seed, int cases = 20, double tol = 1e-12);

/// max(||M - M^*||, ||G M + M G||) for A = 0 and Hermitian A alternately.
PropertyResult grassmann_symmetry(std::uint64_t seed, int cases = 100, double tol = 1e-10);

/// Evenness, support and symmetry of R for Hermitian A.
PropertyResult curvature_structure(std::uint64_t seed, int cases = 100, double tol = 1e-10);

/// Hermitian defect of Grassmann + A for A from hermitian_part.
PropertyResult hermitian_connection(std::uint64_t seed, int cases = 50, double tol = 1e-10);

/// Junk inside Omega^2 and sum [D, a_i] b_i = 0 on the kernel defining junk.
PropertyResult junk_containment(std::uint64_t seed, int cases = 50, double tol = 1e-8);

/// ||R|| of the Grassmann connection over modules of rank m = 1..4 on one triple; report only.
PropertyResult growth_proxy(std::uint64_t seed);

/// Every property above with its default case count.
std::vector<PropertyResult> full_suite(std::uint64_t seed);

}  // namespace ncgcurv::harness
