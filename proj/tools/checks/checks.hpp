#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fockproj::checks {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  // Non-empty when the criterion cannot hold mathematically; the check still
  // runs and reports its real outcome.
  std::string known_limitation;
};

struct Check {
  std::string id;
  std::string description;
  std::function<CheckResult()> run;
  std::string known_limitation;
};

/// Every numerical acceptance criterion, in a stable order with stable ids.
const std::vector<Check>& registry();

/// Runs all checks; `force_fail` appends a deliberately failing entry.
std::vector<CheckResult> run_all(bool force_fail = false);

/// True when every failure is a documented known limitation.
bool acceptable(const std::vector<CheckResult>& results);

}  // namespace fockproj::checks
