#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tautwist {

struct AcceptanceConfig {
  /// Directory holding the shipped move scripts.
  std::string script_dir;
  std::size_t budget = 100'000;
};

/// TAU_TWIST_SCRIPTS if set, else the scripts directory of the source tree.
std::string default_script_dir();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

constexpr int kCriterionCount = 13;

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceConfig& config);
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

}  // namespace tautwist
