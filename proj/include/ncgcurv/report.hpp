#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace ncgcurv {

/// One named residual compared against its tolerance.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Structural failure (shape mismatch) rather than a numerical one.
  bool hard = false;
};

inline Check make_check(std::string name, double residual, double tolerance) {
  return Check{std::move(name), residual, tolerance, residual <= tolerance, false};
}

struct ValidationReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace ncgcurv
