#include <cstdlib>
#include <iostream>
#include <string>

#include "soliton/acceptance.hpp"

// usage: soliton_acceptance [criterion-id]
int main(int argc, char** argv) {
  const std::uint64_t seed = soliton::seed_from_env();
  std::cout << "seed " << seed << "\n";
  bool all = true;
  if (argc > 1) {
    const auto r = soliton::run_criterion(std::atoi(argv[1]), seed);
    std::cout << soliton::format_line(r) << "\n";
    return r.passed ? 0 : 1;
  }
  for (const auto& r : soliton::run_acceptance(seed)) {
    all = all && r.passed;
    std::cout << soliton::format_line(r) << "\n";
  }
  return all ? 0 : 1;
}
