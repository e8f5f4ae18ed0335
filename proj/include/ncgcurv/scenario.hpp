#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncgcurv/curvature.hpp"
#include "ncgcurv/fgpmod.hpp"
#include "ncgcurv/submersion.hpp"
#include "ncgcurv/triple.hpp"

namespace ncgcurv {

/// Input error pointing at a JSON location, e.g. "triple.dirac".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Tolerances {
  double rank = kDefaultRankTol;
  double residual = 1e-8;
};

struct Scenario {
  std::string name;
  std::optional<SpectralTriple> triple;
  std::optional<ProjectiveModule> module;
  std::optional<UniversalConnectionForm> connection;
  std::optional<VerticalOperator> vertical;
  std::optional<SpectralTriple> second_triple;
  std::optional<submersion::FramePoint> frame;
  /// Canned frame name when the frame came from the catalog.
  std::string frame_catalog;
  Tolerances tol;
  std::uint64_t seed = 0;
  /// SHA-256 of the canonical JSON serialisation.
  std::string digest;
};

Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_json(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);

/// Lowercase hex SHA-256 of text.
std::string sha256_hex(const std::string& text);

/// [re, im] pairs (or bare reals) to a matrix; field names the location for errors.
CMatrix parse_matrix(const nlohmann::json& j, const std::string& field);
nlohmann::json matrix_to_json(const CMatrix& m);

}  // namespace ncgcurv
