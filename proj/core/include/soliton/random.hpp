#pragma once

// Seeded generators for randomized checks.

#include <cstdint>
#include <random>
#include <vector>

#include "soliton/expalg.hpp"

namespace soliton {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(int max_num = 6, int max_den = 4);
  /// Strictly positive rational.
  Rational positive(int max_num = 6, int max_den = 4);
  /// n distinct rationals, ascending.
  std::vector<Rational> sorted_distinct(std::size_t n, int max_num = 6, int max_den = 4);
  /// Sum of `terms` random terms with monomial degrees <= max_degree.
  ExpPoly exppoly(const VarSet& vars, int terms, unsigned max_degree = 1);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace soliton
