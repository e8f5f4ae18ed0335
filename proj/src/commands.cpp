#include "ncgcurv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/forms.hpp"
#include "ncgcurv/harness.hpp"

namespace ncgcurv {

using nlohmann::ordered_json;

namespace {

struct Context {
  const Scenario& sc;
  double tol;
  double rank_tol;
  std::uint64_t seed;
  bool emit;
  ResultDocument& doc;

  void check(std::string name, double residual, double tolerance) {
    doc.checks.push_back(make_check(std::move(name), residual, tolerance));
  }
  void matrix(std::string name, const CMatrix& m) {
    if (emit) doc.matrices.emplace_back(std::move(name), m);
  }
};

double rel(double residual, const CMatrix& scale) { return residual / std::max(1.0, scale.norm()); }

const SpectralTriple& need_triple(const Context& c, const std::string& cmd, double tol) {
  if (!c.sc.triple) throw ScenarioError("triple", "required by '" + cmd + "'");
  const ValidationReport rep = validate(*c.sc.triple, tol);
  for (const Check& ch : rep.checks)
    if (!ch.passed) throw ScenarioError("triple", "fails validation (" + ch.name + "); run 'validate' for details");
  return *c.sc.triple;
}

const ProjectiveModule& need_module(const Context& c, const std::string& cmd) {
  need_triple(c, cmd, c.tol);
  if (!c.sc.module) throw ScenarioError("module", "required by '" + cmd + "'");
  build_projector(*c.sc.module, c.tol);
  return *c.sc.module;
}

UniversalConnectionForm connection_or_zero(Context& c) {
  const ProjectiveModule& module = *c.sc.module;
  if (c.sc.connection) return *c.sc.connection;
  c.doc.notes.push_back("connection absent; using the Grassmann connection (A = 0)");
  return UniversalConnectionForm::zero(module.generators(), module.triple().algebra_dim());
}

ordered_json tensor_json(const submersion::Tensor3& t) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < t.dim(0); ++i) {
    ordered_json mid = ordered_json::array();
    for (int j = 0; j < t.dim(1); ++j) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < t.dim(2); ++k) row.push_back(t(i, j, k));
      mid.push_back(std::move(row));
    }
    out.push_back(std::move(mid));
  }
  return out;
}

void append_report(Context& c, const std::string& prefix, const ValidationReport& rep) {
  for (const Check& ch : rep.checks) {
    Check copy = ch;
    copy.name = prefix + copy.name;
    c.doc.checks.push_back(std::move(copy));
  }
}

double orthonormality(const SubspaceBasis& b) {
  if (b.empty()) return 0.0;
  const CMatrix G = b.columns().adjoint() * b.columns();
  return (G - CMatrix::Identity(G.rows(), G.cols())).norm();
}

void cmd_validate(Context& c) {
  const Scenario& sc = c.sc;
  if (!sc.triple && !sc.frame) throw ScenarioError("triple", "nothing to validate: no triple and no frame");
  if (sc.triple) append_report(c, "triple: ", validate(*sc.triple, c.tol));
  if (sc.second_triple) append_report(c, "second_triple: ", validate(*sc.second_triple, c.tol));

  if (sc.module) {
    const ProjectiveModule& module = *sc.module;
    const CMatrix& P = module.projection();
    const CMatrix G = module.module_grading();
    c.check("module: projection idempotent", rel((P * P - P).norm(), P), c.tol);
    c.check("module: projection self-adjoint", rel((P.adjoint() - P).norm(), P), c.tol);
    c.check("module: projection even", rel((G * P * G - P).norm(), P), c.tol);
    c.doc.values["module_generators"] = module.generators();
    c.doc.values["module_rank"] = static_cast<Index>(std::lround(P.trace().real()));
  }

  if (sc.connection) {
    const ProjectiveModule& module = *sc.module;
    const RepresentedConnection rc = assemble_connection(module, *sc.connection);
    const CMatrix& P = module.projection();
    const CMatrix G = module.total_grading();
    double ker_m = 0.0;
    for (Index k = 0; k < module.generators(); ++k)
      for (Index l = 0; l < module.generators(); ++l)
        ker_m = std::max(ker_m, mult_residual(module.triple(), sc.connection->A(k, l)));
    c.check("connection: forms in ker m", ker_m, c.tol);
    c.check("connection: compressed by p", rel((P * rc.A_D * P - rc.A_D).norm(), rc.A_D), c.tol);
    c.check("connection: odd", rel((G * rc.A_D * G + rc.A_D).norm(), rc.A_D), c.tol);
    if (sc.connection->hermitian)
      c.check("connection: hermitian", hermitian_residual(module, *sc.connection), c.tol);
  }

  if (sc.vertical) {
    const ProjectiveModule& module = *sc.module;
    const CMatrix St = module.assemble(sc.vertical->S);
    const CMatrix& P = module.projection();
    const CMatrix G = module.total_grading();
    c.check("vertical: self-adjoint", rel((St - St.adjoint()).norm(), St), c.tol);
    c.check("vertical: compressed by p", rel((P * St * P - St).norm(), St), c.tol);
    c.check("vertical: odd", rel((G * St * G + St).norm(), St), c.tol);
  }

  if (sc.frame) {
    c.check("frame: bracket antisymmetry", sc.frame->antisymmetry_residual(), c.tol);
    c.doc.values["jacobi_residual"] = submersion::jacobi_residual(*sc.frame);
  }
}

void cmd_forms(Context& c) {
  const SpectralTriple& st = need_triple(c, "forms", c.tol);
  const FormSpace one = one_form_space(st, c.rank_tol);
  const FormSpace two = two_form_space(st, c.rank_tol);
  const Index d = st.algebra_dim();
  double ajunkie = 0.0;
  double derivation = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const AlgebraElement bi = AlgebraElement::unit(d, i);
      const UniversalOneForm w = left_mult(st, bi, delta(st, AlgebraElement::unit(d, j)));
      ajunkie = std::max(ajunkie, (two_form_direct(st, w) - two_form_via_anticommutator(st, w)).norm() /
                                      two_form_scale(st, w));
      derivation = std::max(derivation, (pi_D(st, w) - st.basis(i) * st.basis_commutator(j)).norm());
    }
  c.check("ajunkie identity on b_i delta(b_j)", ajunkie, c.tol);
  c.check("pi_D(b_i delta(b_j)) = b_i [D, b_j]", derivation, c.tol);
  c.check("omega1 basis orthonormal", orthonormality(one.basis), c.tol);
  c.check("omega2 basis orthonormal", orthonormality(two.basis), c.tol);
  c.doc.values["hilbert_dimension"] = st.dim();
  c.doc.values["algebra_dimension"] = d;
  c.doc.values["omega1_dimension"] = one.dimension();
  c.doc.values["omega2_dimension"] = two.dimension();
  for (Index k = 0; k < one.dimension(); ++k) c.matrix("omega1[" + std::to_string(k) + "]", one.basis.element(k));
  for (Index k = 0; k < two.dimension(); ++k) c.matrix("omega2[" + std::to_string(k) + "]", two.basis.element(k));
}

void cmd_junk(Context& c) {
  const SpectralTriple& st = need_triple(c, "junk", c.tol);
  const FormSpace one = one_form_space(st, c.rank_tol);
  const FormSpace two = two_form_space(st, c.rank_tol);
  const std::vector<UniversalOneForm> kernel = pi_D_kernel(st, c.rank_tol);
  const FormSpace junk = junk_space(st, c.rank_tol);
  double inside = 0.0;
  for (const CMatrix& J : junk.basis.elements()) inside = std::max(inside, membership_residual(J, two.basis));
  double third = 0.0;
  double image = 0.0;
  for (const UniversalOneForm& w : kernel) {
    third = std::max(third, pi_D_right(st, w).norm());
    image = std::max(image, membership_residual(pi_D2(st, w), junk.basis));
  }
  c.check("junk inside omega2", inside, c.tol);
  c.check("sum [D, a_i] b_i = 0 on the junk kernel", third, c.tol);
  c.check("pi_D2 of the kernel inside junk", image, c.tol);
  c.doc.values["omega1_dimension"] = one.dimension();
  c.doc.values["omega2_dimension"] = two.dimension();
  c.doc.values["kernel_dimension"] = static_cast<Index>(kernel.size());
  c.doc.values["junk_dimension"] = junk.dimension();
  for (Index k = 0; k < junk.dimension(); ++k) c.matrix("junk[" + std::to_string(k) + "]", junk.basis.element(k));
}

void cmd_curvature(Context& c) {
  const ProjectiveModule& module = need_module(c, "curvature");
  const UniversalConnectionForm A = connection_or_zero(c);
  represent_connection(module, A, c.tol);
  const CurvatureReport rep = curvature_report(module, A, c.tol, c.rank_tol);
  c.check("route equality", rep.route_residual, c.tol);
  c.check("curvature even", rep.evenness_residual, c.tol);
  c.check("curvature supported on range(P)", rep.support_residual, c.tol);
  if (A.hermitian) {
    c.check("curvature self-adjoint", rep.symmetry_residual, c.tol);
    c.check("connection hermitian", hermitian_residual(module, A), c.tol);
  }
  c.doc.values["route_residual"] = rep.route_residual;
  c.doc.values["spectral_norm"] = rep.norm;
  c.doc.values["lifted_junk_dimension"] = rep.junk_dimension;
  c.doc.values["junk_canonical_norm"] = spectral_norm(rep.junk_canonical);
  c.matrix("R", rep.R);
  c.matrix("R_formula", rep.R_formula);
  c.matrix("R_junk_canonical", rep.junk_canonical);
  c.doc.notes.push_back(std::string("curvature convention: ") + rep.convention);
}

void cmd_correspondence(Context& c) {
  const ProjectiveModule& module = need_module(c, "correspondence");
  if (!c.sc.vertical) throw ScenarioError("vertical", "required by 'correspondence'");
  const UniversalConnectionForm A = connection_or_zero(c);
  represent_connection(module, A, c.tol);
  assemble_vertical(module, *c.sc.vertical, c.tol);
  const CMatrix RS = correspondence_curvature(module, A, *c.sc.vertical, c.tol);
  const CMatrix R = curvature_direct(module, A, c.tol);
  c.check("correspondence decomposition",
          correspondence_decomposition_residual(module, A, *c.sc.vertical, c.tol), c.tol);
  c.doc.values["correspondence_curvature_norm"] = spectral_norm(RS);
  c.doc.values["curvature_norm"] = spectral_norm(R);
  c.doc.values["vertical_anticommutator_ratio"] = vertical_anticommutator_ratio(module, A, *c.sc.vertical, c.tol);
  c.matrix("R_S", RS);
  c.matrix("R", R);
  c.doc.notes.push_back(std::string("curvature convention: ") + kCurvatureConvention);
}

void cmd_external(Context& c) {
  const SpectralTriple& st1 = need_triple(c, "external", c.tol);
  if (!c.sc.second_triple) throw ScenarioError("second_triple", "required by 'external'");
  const ValidationReport rep = validate(*c.sc.second_triple, c.tol);
  for (const Check& ch : rep.checks)
    if (!ch.passed) throw ScenarioError("second_triple", "fails validation (" + ch.name + ")");
  const SpectralTriple& st2 = *c.sc.second_triple;
  const double scale = std::pow(spectral_norm(st1.dirac()) + spectral_norm(st2.dirac()), 2);
  const CMatrix defect = external_product_defect(st1, st2);
  const double norm = spectral_norm(defect);
  c.check("external product defect", norm, 1e-12 * scale);
  c.doc.values["defect_norm"] = norm;
  c.doc.values["scale"] = scale;
  c.doc.values["ungraded_defect_norm"] = spectral_norm(ungraded_external_defect(st1, st2));
  c.matrix("defect", defect);
  c.doc.notes.push_back("ungraded_defect_norm drops the Koszul sign and equals ||2 D1 (x) D2||");
}

void cmd_product_spectrum(Context& c) {
  const ProjectiveModule& module = need_module(c, "product-spectrum");
  const UniversalConnectionForm A = connection_or_zero(c);
  const ProductOperator op = product_operator(module, A, c.tol);
  const CMatrix V = range_basis(op.P);
  const CMatrix restricted = V.adjoint() * op.mat * V;
  c.check("symmetric on range(P)", (restricted - restricted.adjoint()).norm(), c.tol);
  c.check("odd for Gamma (x) gamma", op.oddness_residual(), c.tol);
  const std::vector<double> ev = spectrum(op, c.tol);
  double pairing = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) pairing = std::max(pairing, std::abs(ev[i] + ev[ev.size() - 1 - i]));
  c.check("spectrum symmetric about 0", pairing, c.tol * std::max(1.0, spectral_norm(op.mat)));
  c.doc.values["range_dimension"] = static_cast<Index>(ev.size());
  c.doc.values["eigenvalues"] = ev;
  c.matrix("product_operator", op.mat);
}

void cmd_submersion(Context& c) {
  if (!c.sc.frame) throw ScenarioError("frame", "required by 'submersion'");
  const submersion::FramePoint& fp = *c.sc.frame;
  const submersion::SubmersionInvariants inv = submersion::invariants(fp);
  double s_sym = 0.0;
  for (int a = 0; a < fp.dim_F(); ++a)
    for (int b = 0; b < fp.dim_F(); ++b)
      for (int i = 0; i < fp.dim_H(); ++i) s_sym = std::max(s_sym, std::abs(inv.S_pi(a, b, i) - inv.S_pi(b, a, i)));
  double o_anti = 0.0;
  for (int i = 0; i < fp.dim_H(); ++i)
    for (int j = 0; j < fp.dim_H(); ++j)
      for (int a = 0; a < fp.dim_F(); ++a)
        o_anti = std::max(o_anti, std::abs(inv.Omega(i, j, a) + inv.Omega(j, i, a)));
  const double jacobi = submersion::jacobi_residual(fp);
  c.check("bracket antisymmetry", fp.antisymmetry_residual(), c.tol);
  c.check("S_pi symmetric in vertical slots", s_sym, c.tol);
  c.check("Omega antisymmetric in horizontal slots", o_anti, c.tol);
  if (!c.sc.frame_catalog.empty()) c.check("jacobi identity", jacobi, c.tol);
  if (!c.sc.frame_catalog.empty()) c.doc.values["frame"] = c.sc.frame_catalog;
  c.doc.values["dim_M"] = fp.dim_M();
  c.doc.values["dim_F"] = fp.dim_F();
  c.doc.values["S_pi"] = tensor_json(inv.S_pi);
  c.doc.values["mean_curvature"] = inv.k;
  c.doc.values["Omega"] = tensor_json(inv.Omega);
  c.doc.values["jacobi_residual"] = jacobi;
  c.doc.notes.push_back("frame indices are 0-based: vertical e_a first, then horizontal f_i");
  c.doc.notes.push_back("S_pi[a][b][i] = S(e_a, e_b, f_i); Omega[i][j][a] = Omega(f_i, f_j, e_a)");
}

void cmd_selftest(Context& c) {
  for (const harness::PropertyResult& r : harness::full_suite(c.seed)) {
    ordered_json entry;
    entry["cases"] = r.cases;
    entry["worst"] = r.worst;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    if (!r.series.empty()) entry["series"] = r.series;
    if (r.asserted) {
      c.doc.checks.push_back(Check{r.name, r.worst, r.tolerance, r.passed, false});
    } else {
      entry["asserted"] = false;
    }
    c.doc.values[r.name] = std::move(entry);
  }
  c.doc.notes.push_back("growth_proxy is reported, not asserted");
}

ordered_json matrix_json(const CMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({m(r, k).real(), m(r, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string text_value(const ordered_json& v) {
  if (v.is_number_float()) return fmt17(v.get<double>());
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + text_value(v[i]);
    return out + "]";
  }
  if (v.is_object()) {
    std::string out = "{";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      out += (first ? "" : ", ") + it.key() + ": " + text_value(it.value());
      first = false;
    }
    return out + "}";
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

bool ResultDocument::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "forms",   "junk",           "curvature",  "correspondence",
                                              "external", "product-spectrum", "submersion", "selftest"};
  return names;
}

ResultDocument run(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  ResultDocument doc;
  doc.command = command;
  doc.scenario = scenario.name.empty() ? "unnamed" : scenario.name;
  doc.digest = scenario.digest;
  doc.seed = options.seed.value_or(scenario.seed);
  doc.tol = options.tol.value_or(scenario.tol.residual);
  doc.rank_tol = options.rank_tol.value_or(scenario.tol.rank);
  Context c{scenario, doc.tol, doc.rank_tol, doc.seed, options.emit_matrices, doc};

  using Handler = void (*)(Context&);
  static const std::map<std::string, Handler> handlers{
      {"validate", cmd_validate},     {"forms", cmd_forms},
      {"junk", cmd_junk},             {"curvature", cmd_curvature},
      {"correspondence", cmd_correspondence}, {"external", cmd_external},
      {"product-spectrum", cmd_product_spectrum}, {"submersion", cmd_submersion},
      {"selftest", cmd_selftest}};
  auto it = handlers.find(command);
  if (it == handlers.end()) throw ScenarioError("<command>", "unknown command '" + command + "'");
  it->second(c);
  return doc;
}

ordered_json to_json(const ResultDocument& doc) {
  ordered_json j;
  j["tool"] = "ncgcurv";
  j["version"] = kVersion;
  j["command"] = doc.command;
  j["scenario"] = doc.scenario;
  j["digest"] = doc.digest;
  j["seed"] = doc.seed;
  j["tolerances"] = {{"residual", doc.tol}, {"rank", doc.rank_tol}};
  j["passed"] = doc.passed();
  ordered_json checks = ordered_json::array();
  for (const Check& c : doc.checks)
    checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  j["checks"] = std::move(checks);
  j["values"] = doc.values;
  ordered_json mats = ordered_json::object();
  for (const auto& [name, m] : doc.matrices)
    mats[name] = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", matrix_json(m)}};
  j["matrices"] = std::move(mats);
  j["notes"] = doc.notes;
  return j;
}

std::string render_json(const ResultDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string render_text(const ResultDocument& doc) {
  std::ostringstream out;
  out << "ncgcurv " << kVersion << "\n";
  out << "command: " << doc.command << "\n";
  out << "scenario: " << doc.scenario << "\n";
  out << "digest: " << doc.digest << "\n";
  out << "seed: " << doc.seed << "\n";
  out << "tolerances: residual=" << fmt17(doc.tol) << " rank=" << fmt17(doc.rank_tol) << "\n";
  out << "checks:\n";
  for (const Check& c : doc.checks)
    out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  residual=" << fmt17(c.residual)
        << "  tolerance=" << fmt17(c.tolerance) << "\n";
  if (!doc.values.empty()) {
    out << "values:\n";
    for (auto it = doc.values.begin(); it != doc.values.end(); ++it)
      out << "  " << it.key() << " = " << text_value(it.value()) << "\n";
  }
  if (!doc.matrices.empty()) {
    out << "matrices:\n";
    for (const auto& [name, m] : doc.matrices) {
      out << "  " << name << " (" << m.rows() << "x" << m.cols() << ")\n";
      for (Index r = 0; r < m.rows(); ++r) {
        out << "   ";
        for (Index k = 0; k < m.cols(); ++k)
          out << " [" << fmt17(m(r, k).real()) << ", " << fmt17(m(r, k).imag()) << "]";
        out << "\n";
      }
    }
  }
  if (!doc.notes.empty()) {
    out << "notes:\n";
    for (const std::string& n : doc.notes) out << "  " << n << "\n";
  }
  out << "result: " << (doc.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int exit_code(const ResultDocument& doc) { return doc.passed() ? 0 : 1; }

}  // namespace ncgcurv
