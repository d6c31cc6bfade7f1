#pragma once

#include <string>
#include <vector>

#include "ncqosc/scenario.hpp"

namespace ncqosc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Runs the full cross-module verification suite. When a scenario is given,
/// an additional configuration-consistency check (EP family constraint for
/// the scenario's parameters) is prepended.
ValidationReport run_validation(const Scenario* scenario = nullptr);

}  // namespace ncqosc
