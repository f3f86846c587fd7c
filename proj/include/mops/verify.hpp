#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mops {

struct VerifyConfig {
  std::string suite = "all";
  // Override the per-suite default grids when set.
  std::optional<int> r_max;
  std::optional<int> n_max;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string witness;  // first failure, empty when the suite passes
};

struct VerifyResult {
  std::vector<SuiteResult> suites;
  bool all_pass = true;
  std::string text;  // the deterministic report printed by the CLI
};

const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown suite name.
VerifyResult run_verify(const VerifyConfig& cfg);

}  // namespace mops
