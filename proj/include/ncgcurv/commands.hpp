#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgcurv/report.hpp"
#include "ncgcurv/scenario.hpp"

namespace ncgcurv {

inline constexpr const char* kVersion = "0.1.0";

struct RunOptions {
  std::optional<double> tol;       // overrides the scenario's residual tolerance
  std::optional<double> rank_tol;  // overrides the scenario's rank tolerance
  std::optional<std::uint64_t> seed;
  bool emit_matrices = false;
};

struct ResultDocument {
  std::string command;
  std::string scenario;
  std::string digest;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double rank_tol = 0.0;
  std::vector<Check> checks;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, CMatrix>> matrices;
  std::vector<std::string> notes;

  bool passed() const;
};

const std::vector<std::string>& command_names();

/// Dispatches one command. Throws ScenarioError when the scenario lacks a
/// section the command needs, and lets input invariant violations propagate.
ResultDocument run(const std::string& command, const Scenario& scenario, const RunOptions& options);

nlohmann::ordered_json to_json(const ResultDocument& doc);
std::string render_json(const ResultDocument& doc);
/// Text report; floating-point values use 17 significant digits.
std::string render_text(const ResultDocument& doc);

/// 0 when every check passed, 1 otherwise.
int exit_code(const ResultDocument& doc);

}  // namespace ncgcurv
