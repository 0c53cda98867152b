#pragma once

// The acceptance battery: eight self-contained checks, each with a fixed
// instance distribution, a functional pass condition and a wall-clock budget.
// Deterministic in the base seed.

#include <cstdint>
#include <string>
#include <vector>

namespace conedens::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
  double budget_seconds;
};

inline constexpr std::uint64_t kDefaultSeed = 2024;

CriterionResult run_criterion(int id, std::uint64_t base_seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t base_seed = kDefaultSeed);

// One "[PASS]/[FAIL] <id>. <name> ..." line per criterion; returns 0 iff all
// passed.
int print_results(const std::vector<CriterionResult>& results);

}  // namespace conedens::acceptance
