#include <doctest.h>

#include <string>

#include "ncgcurv/commands.hpp"
#include "support.hpp"

using namespace ncgcurv;
using namespace ncgcurv::test;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_scenario_text(text);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  return "";
}

const char* kTwoPoint = R"({
  "triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]],
             "dirac": [[0, 1], [1, 0]]}
})";

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("bundled two-point scenario parses and validates") {
    const Scenario sc = parse_scenario(scenario_path("two_point.json"));
    REQUIRE(sc.triple.has_value());
    CHECK(validate(*sc.triple).passed());
    CHECK_FALSE(sc.module.has_value());
    CHECK_FALSE(sc.connection.has_value());
    CHECK(sc.digest.size() == 64);
  }

  TEST_CASE("complex entries") {
    const Scenario sc = parse_scenario_text(R"({
      "triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]]],
                 "dirac": [[0, [0, -1]], [[0, 1], 0]]}})");
    CHECK(sc.triple->dirac()(0, 1) == Complex(0.0, -1.0));
    CHECK(sc.triple->dirac()(1, 0) == Complex(0.0, 1.0));
  }

  TEST_CASE("non-square matrix names the field") {
    const std::string err = error_of(R"({
      "triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]]],
                 "dirac": [[0, 1, 0], [1, 0, 0]]}})");
    CHECK(err.find("triple.dirac") != std::string::npos);
    CHECK(err.find("2x3") != std::string::npos);
  }

  TEST_CASE("ragged matrix") {
    const std::string err = error_of(R"({
      "triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]]],
                 "dirac": [[0, 1], [1]]}})");
    CHECK(err.find("triple.dirac") != std::string::npos);
    CHECK(err.find("ragged") != std::string::npos);
  }

  TEST_CASE("malformed numeral") {
    CHECK_FALSE(error_of(R"({"triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]]],
                                         "dirac": [[0, "one"], [1, 0]]}})")
                    .empty());
    CHECK_THROWS(parse_scenario_text("{ not json"));
  }

  TEST_CASE("inconsistent dimensions") {
    CHECK_FALSE(error_of(R"({"triple": {"gamma_signs": [1, -1, 1], "algebra_basis": [[[1, 0], [0, 1]]],
                                         "dirac": [[0, 1], [1, 0]]}})")
                    .empty());
    CHECK_FALSE(error_of(std::string(R"({"triple": )") + R"({"gamma_signs": [1, -1],
        "algebra_basis": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]], "dirac": [[0, 1], [1, 0]]},
        "module": {"grading": [1], "p": [[[1, 0, 0]]]}})")
                    .empty());
  }

  TEST_CASE("missing connection defaults to A = 0") {
    const Scenario sc = parse_scenario(scenario_path("two_point_module.json"));
    CHECK_FALSE(sc.connection.has_value());
    const ResultDocument doc = run("curvature", sc, {});
    CHECK(doc.passed());
    bool noted = false;
    for (const auto& n : doc.notes) noted = noted || n.find("A = 0") != std::string::npos;
    CHECK(noted);
  }

  TEST_CASE("digest depends on content only") {
    const Scenario a = parse_scenario_text(kTwoPoint);
    const Scenario b = parse_scenario_text(std::string("\n\n") + kTwoPoint + "  ");
    CHECK(a.digest == b.digest);
    const Scenario c = parse_scenario_text(R"({
      "triple": {"gamma_signs": [1, -1], "algebra_basis": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]],
                 "dirac": [[0, 2], [2, 0]]}})");
    CHECK(a.digest != c.digest);
  }

  TEST_CASE("sha256 of a known string") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("frames") {
    const Scenario explicit_frame = parse_scenario(scenario_path("heisenberg_explicit.json"));
    REQUIRE(explicit_frame.frame.has_value());
    CHECK(explicit_frame.frame_catalog.empty());
    const Scenario canned = parse_scenario(scenario_path("heisenberg.json"));
    CHECK(canned.frame_catalog == "heisenberg");
    CHECK_FALSE(error_of(R"({"frame": {"dim_M": 3, "dim_F": 1, "brackets": [[1, 2, 0, 1], [1, 2, 0, 2]]}})").empty());
    CHECK_FALSE(error_of(R"({"frame": {"dim_M": 2, "dim_F": 2, "brackets": []}})").empty());
  }
}

TEST_SUITE("commands") {
  TEST_CASE("junk on the two-point triple") {
    const ResultDocument doc = run("junk", parse_scenario(scenario_path("two_point.json")), {});
    CHECK(doc.passed());
    CHECK(doc.values["junk_dimension"] == 0);
    CHECK(doc.values["omega1_dimension"] == 2);
    CHECK(doc.values["omega2_dimension"] == 2);
  }

  TEST_CASE("curvature on the two-point module") {
    RunOptions opts;
    opts.emit_matrices = true;
    const ResultDocument doc = run("curvature", parse_scenario(scenario_path("two_point_module.json")), opts);
    CHECK(doc.passed());
    CHECK(doc.values["route_residual"].get<double>() <= 1e-9);
    bool found = false;
    for (const auto& [name, m] : doc.matrices)
      if (name == "R") {
        found = true;
        CHECK((m - diag({-1.0, 0.0, 0.0, -1.0})).norm() <= 1e-10);
      }
    CHECK(found);
  }

  TEST_CASE("external on the two-point pair") {
    const ResultDocument doc = run("external", parse_scenario(scenario_path("two_point_pair.json")), {});
    CHECK(doc.passed());
    CHECK(doc.values["defect_norm"].get<double>() <= 1e-12);
    CHECK(doc.values["ungraded_defect_norm"].get<double>() == doctest::Approx(2.0));
  }

  TEST_CASE("three-point junk scenario") {
    const ResultDocument doc = run("junk", parse_scenario(scenario_path("three_point_junk.json")), {});
    CHECK(doc.values["junk_dimension"] == 2);
    CHECK(doc.values["omega1_dimension"] == 4);
    CHECK(doc.values["omega2_dimension"] == 5);
  }

  TEST_CASE("failing validation exits 1") {
    const ResultDocument doc = run("validate", parse_scenario(fixture_path("bad_dirac.json")), {});
    CHECK_FALSE(doc.passed());
    CHECK(exit_code(doc) == 1);
  }

  TEST_CASE("missing sections are input errors") {
    const Scenario sc = parse_scenario(scenario_path("two_point.json"));
    CHECK_THROWS_AS(run("curvature", sc, {}), ScenarioError);
    CHECK_THROWS_AS(run("submersion", sc, {}), ScenarioError);
    CHECK_THROWS_AS(run("external", sc, {}), ScenarioError);
  }

  TEST_CASE("reports are deterministic") {
    const Scenario sc = parse_scenario(scenario_path("two_point_connection.json"));
    RunOptions opts;
    opts.emit_matrices = true;
    for (const char* cmd : {"curvature", "correspondence", "product-spectrum"}) {
      CHECK(render_json(run(cmd, sc, opts)) == render_json(run(cmd, sc, opts)));
      CHECK(render_text(run(cmd, sc, opts)) == render_text(run(cmd, sc, opts)));
    }
  }

  TEST_CASE("tolerance overrides are echoed") {
    RunOptions opts;
    opts.tol = 1e-6;
    opts.rank_tol = 1e-7;
    const ResultDocument doc = run("validate", parse_scenario(scenario_path("two_point.json")), opts);
    CHECK(doc.tol == 1e-6);
    CHECK(doc.rank_tol == 1e-7);
    CHECK(to_json(doc)["tolerances"]["residual"] == 1e-6);
  }
}
