#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncgcurv/commands.hpp"
#include "ncgcurv/scenario.hpp"

namespace {

constexpr int kExitInput = 2;

std::string command_list() {
  std::string out;
  for (const auto& name : ncgcurv::command_names()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature of connections on modules over finite spectral triples"};
  app.set_version_flag("--version", ncgcurv::kVersion);

  std::string command;
  std::string path;
  double tol = 0.0;
  double rank_tol = 0.0;
  std::uint64_t seed = 0;
  bool emit = false;
  std::string format = "text";

  app.add_option("command", command, "One of: " + command_list())
      ->required()
      ->check(CLI::IsMember(ncgcurv::command_names()));
  app.add_option("scenario", path, "Scenario JSON file (optional for selftest)");
  auto* tol_opt = app.add_option("--tol", tol, "Residual tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  auto* rank_opt = app.add_option("--rank-tol", rank_tol, "Relative rank cut-off (default 1e-9)")
                       ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for selftest");
  app.add_flag("--emit-matrices", emit, "Include matrices in the report");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  ncgcurv::RunOptions options;
  if (*tol_opt) options.tol = tol;
  if (*rank_opt) options.rank_tol = rank_tol;
  if (*seed_opt) options.seed = seed;
  options.emit_matrices = emit;

  try {
    ncgcurv::Scenario scenario;
    if (!path.empty()) {
      scenario = ncgcurv::parse_scenario(path);
    } else if (command == "selftest") {
      scenario.name = "selftest";
      scenario.digest = ncgcurv::sha256_hex("{}");
    } else {
      throw ncgcurv::ScenarioError("<scenario>", "a scenario file is required for '" + command + "'");
    }
    const ncgcurv::ResultDocument doc = ncgcurv::run(command, scenario, options);
    std::cout << (format == "json" ? ncgcurv::render_json(doc) : ncgcurv::render_text(doc));
    return ncgcurv::exit_code(doc);
  } catch (const ncgcurv::ScenarioError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const ncgcurv::InvariantError& e) {
    std::cerr << "input error: " << e.what() << " (residual " << e.residual() << ")\n";
  } catch (const ncgcurv::NotInAlgebraError& e) {
    std::cerr << "input error: " << e.what() << " (residual " << e.residual() << ")\n";
  } catch (const ncgcurv::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return kExitInput;
}
