#include "soliton/random.hpp"

#include <algorithm>

namespace soliton {

int RandomSource::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational RandomSource::rational(int max_num, int max_den) {
  Rational r(uniform_int(-max_num, max_num), uniform_int(1, max_den));
  r.canonicalize();
  return r;
}

Rational RandomSource::positive(int max_num, int max_den) {
  Rational r(uniform_int(1, max_num), uniform_int(1, max_den));
  r.canonicalize();
  return r;
}

std::vector<Rational> RandomSource::sorted_distinct(std::size_t n, int max_num, int max_den) {
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational r = rational(max_num, max_den);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExpPoly RandomSource::exppoly(const VarSet& vars, int terms, unsigned max_degree) {
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Term t{rational(), std::vector<unsigned>(vars.size()), std::vector<Rational>(vars.size())};
    if (t.coeff == 0) t.coeff = 1;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      t.mono[v] = static_cast<unsigned>(uniform_int(0, static_cast<int>(max_degree)));
      t.freq[v] = rational(3, 2);
    }
    ts.push_back(std::move(t));
  }
  return ExpPoly(vars, std::move(ts));
}

}  // namespace soliton
