#pragma once

// The acceptance criteria as executable checks.

#include <cstdint>
#include <string>
#include <vector>

namespace soliton {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// SOLITON_FORGE_SEED when set to an unsigned integer, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

/// Runs criteria 1..11 in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Runs a single criterion.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// `[PASS] 3 title: detail` style line.
std::string format_line(const CriterionResult& result);

}  // namespace soliton
