#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace p1inv::acceptance {

enum class Tier { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::vector<std::string> details;  ///< one line per sub-check

  bool passed() const noexcept { return checks_passed && seconds <= limit_seconds; }
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1..9). The quick tier shrinks the random sample sizes
/// of criteria 6 and 8; everything else is identical.
CriterionResult run_criterion(int id, Tier tier, std::uint64_t seed);

std::vector<CriterionResult> run_all(Tier tier, std::uint64_t seed);

}  // namespace p1inv::acceptance
