#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bergman {

/// Outcome of one randomized cross-module check.
struct CheckResult {
  std::string name;
  int cases = 0;
  int skipped = 0;  // filtered out as numerically degenerate
  int failures = 0;
  nlohmann::json first_failure;  // replayable inputs of the first failing case

  bool passed() const { return failures == 0; }
};

/// Names accepted by run_checks, in execution order.
std::vector<std::string> check_names();

/// Runs the named checks ("all" selects every one) from a fixed seed.
/// Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, std::uint64_t seed, int scale = 1);

}  // namespace bergman
