#include "soliton/expalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "soliton/error.hpp"

namespace soliton {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DimensionMismatch("variable names must be non-empty");
    if (!seen.insert(n).second) throw DimensionMismatch("duplicate variable name '" + n + "'");
  }
}

VarSet VarSet::kp() { return VarSet({"t", "x", "y"}); }

VarSet VarSet::kdv() { return VarSet({"t", "x"}); }

VarSet VarSet::zk(int dimension) {
  if (dimension < 1) throw DimensionMismatch("ZK dimension must be >= 1");
  std::vector<std::string> names{"t"};
  for (int j = 1; j <= dimension; ++j) names.push_back("x" + std::to_string(j));
  return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

VarSet VarSet::without(std::size_t index) const {
  std::vector<std::string> names = names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return VarSet(std::move(names));
}

// ---------------------------------------------------------------------------
// ExpPoly

namespace {

void require_same_vars(const ExpPoly& p, const ExpPoly& q) {
  if (p.vars() != q.vars()) throw VarSetMismatch("operands have different variable sets");
}

void check_term_arity(const VarSet& vars, const Term& t) {
  if (t.mono.size() != vars.size() || t.freq.size() != vars.size()) {
    throw DimensionMismatch("term arity does not match the variable set");
  }
}

// Three-way comparison on (freq, mono).
int compare_key(const Term& a, const Term& b) {
  for (std::size_t i = 0; i < a.freq.size(); ++i) {
    int c = cmp(a.freq[i], b.freq[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.mono.size(); ++i) {
    if (a.mono[i] != b.mono[i]) return a.mono[i] < b.mono[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool term_order_less(const Term& a, const Term& b) { return compare_key(a, b) < 0; }

ExpPoly::ExpPoly(VarSet vars) : vars_(std::move(vars)) {}

ExpPoly::ExpPoly(VarSet vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (const auto& t : terms_) check_term_arity(vars_, t);
  canonicalize();
}

void ExpPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_order_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && compare_key(merged.back(), t) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(merged);
}

ExpPoly ExpPoly::constant(const VarSet& vars, const Rational& c) {
  return exponential(vars, c, std::vector<Rational>(vars.size()));
}

ExpPoly ExpPoly::exponential(const VarSet& vars, const Rational& c, std::vector<Rational> freq) {
  Term t{c, std::vector<unsigned>(vars.size(), 0), std::move(freq)};
  return ExpPoly(vars, {std::move(t)});
}

ExpPoly ExpPoly::monomial(const VarSet& vars, const Rational& c, std::vector<unsigned> mono) {
  Term t{c, std::move(mono), std::vector<Rational>(vars.size())};
  return ExpPoly(vars, {std::move(t)});
}

ExpPoly ExpPoly::variable(const VarSet& vars, std::string_view name) {
  std::vector<unsigned> mono(vars.size(), 0);
  mono[vars.require(name)] = 1;
  return monomial(vars, Rational(1), std::move(mono));
}

bool ExpPoly::is_pure_exponential() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::all_of(t.mono.begin(), t.mono.end(), [](unsigned m) { return m == 0; });
  });
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  require_same_vars(*this, other);
  // Both sides are sorted; a linear merge keeps the normal form.
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size()) {
      out.push_back(other.terms_[j++]);
    } else {
      int c = compare_key(terms_[i], other.terms_[j]);
      if (c < 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c > 0) {
        out.push_back(other.terms_[j++]);
      } else {
        Term t = std::move(terms_[i++]);
        t.coeff += other.terms_[j++].coeff;
        if (sgn(t.coeff) != 0) out.push_back(std::move(t));
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) { return *this += -other; }

ExpPoly& ExpPoly::operator*=(const ExpPoly& other) {
  *this = *this * other;
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  require_same_vars(lhs, rhs);
  std::vector<Term> out;
  out.reserve(lhs.terms_.size() * rhs.terms_.size());
  const std::size_t n = lhs.vars_.size();
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      t.mono.resize(n);
      t.freq.resize(n);
      for (std::size_t k = 0; k < n; ++k) {
        t.mono[k] = a.mono[k] + b.mono[k];
        t.freq[k] = a.freq[k] + b.freq[k];
      }
      out.push_back(std::move(t));
    }
  }
  return ExpPoly(lhs.vars_, std::move(out));
}

ExpPoly add(const ExpPoly& p, const ExpPoly& q) { return p + q; }

ExpPoly mul(const ExpPoly& p, const ExpPoly& q) { return p * q; }

ExpPoly diff(const ExpPoly& p, std::string_view var, unsigned order) {
  const std::size_t k = p.vars().require(var);
  std::vector<Term> current(p.terms().begin(), p.terms().end());
  for (unsigned step = 0; step < order; ++step) {
    std::vector<Term> next;
    next.reserve(current.size() * 2);
    for (const auto& t : current) {
      // d/dv (c v^m e^{f v}) = c f v^m e^{f v} + c m v^{m-1} e^{f v}
      if (sgn(t.freq[k]) != 0) {
        Term a = t;
        a.coeff *= t.freq[k];
        next.push_back(std::move(a));
      }
      if (t.mono[k] > 0) {
        Term b = t;
        b.coeff *= t.mono[k];
        b.mono[k] -= 1;
        next.push_back(std::move(b));
      }
    }
    current = std::move(next);
  }
  return ExpPoly(p.vars(), std::move(current));
}

ExpPoly substitute_affine(const ExpPoly& p, const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = p.vars().size();
  if (a.size() != n || b.size() != n) throw DimensionMismatch("affine map arity does not match the variable set");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionMismatch("affine matrix must be square");
  }

  // Linear forms (A v + b)_i as ring elements.
  std::vector<ExpPoly> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      std::vector<unsigned> mono(n, 0);
      mono[j] = 1;
      terms.push_back(Term{a[i][j], std::move(mono), std::vector<Rational>(n)});
    }
    if (sgn(b[i]) != 0) terms.push_back(Term{b[i], std::vector<unsigned>(n, 0), std::vector<Rational>(n)});
    forms.emplace_back(p.vars(), std::move(terms));
  }

  ExpPoly result(p.vars());
  for (const auto& t : p.terms()) {
    Rational shift;
    for (std::size_t i = 0; i < n; ++i) shift += t.freq[i] * b[i];
    if (sgn(shift) != 0) {
      throw RangeError("affine shift produces a constant exponential factor outside the ring");
    }
    // f . (A v) = (A^T f) . v
    std::vector<Rational> freq(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) freq[j] += t.freq[i] * a[i][j];
    }
    ExpPoly term = ExpPoly::exponential(p.vars(), t.coeff, std::move(freq));
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned m = 0; m < t.mono[i]; ++m) term = term * forms[i];
    }
    result += term;
  }
  return result;
}

namespace {

double checked(double value) {
  if (!std::isfinite(value)) throw RangeError("evaluation overflowed the double range");
  return value;
}

void check_point(const ExpPoly& p, std::size_t arity) {
  if (arity != p.vars().size()) throw DimensionMismatch("point arity does not match the variable set");
}

}  // namespace

double eval_scaled(const ExpPoly& p, std::span<const double> point, double shift) {
  check_point(p, point.size());
  double sum = 0.0;
  for (const auto& t : p.terms()) {
    double exponent = -shift;
    double poly = to_double(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (sgn(t.freq[i]) != 0) exponent += to_double(t.freq[i]) * point[i];
      if (t.mono[i] != 0) poly *= std::pow(point[i], static_cast<double>(t.mono[i]));
    }
    sum += poly * std::exp(exponent);
  }
  return checked(sum);
}

double eval(const ExpPoly& p, std::span<const double> point) { return eval_scaled(p, point, 0.0); }

double eval(const ExpPoly& p, std::span<const Rational> point) {
  check_point(p, point.size());
  bool exact = true;
  for (const auto& t : p.terms()) {
    Rational dot;
    for (std::size_t i = 0; i < point.size(); ++i) dot += t.freq[i] * point[i];
    if (sgn(dot) != 0) {
      exact = false;
      break;
    }
  }
  if (exact) {
    Rational sum;
    for (const auto& t : p.terms()) {
      Rational term = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) term *= pow(point[i], t.mono[i]);
      sum += term;
    }
    return checked(to_double(sum));
  }
  std::vector<double> approx(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) approx[i] = to_double(point[i]);
  return eval(p, approx);
}

double max_exponent(const ExpPoly& p, std::span<const double> point) {
  check_point(p, point.size());
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : p.terms()) {
    double e = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) e += to_double(t.freq[i]) * point[i];
    best = std::max(best, e);
  }
  return p.is_zero() ? 0.0 : best;
}

bool is_zero(const ExpPoly& p) { return p.is_zero(); }

bool equals(const ExpPoly& p, const ExpPoly& q) { return p == q; }

std::vector<FrequencyGroup> group_by_frequency(const ExpPoly& p, std::string_view var) {
  const std::size_t k = p.vars().require(var);
  const VarSet rest = p.vars().without(k);

  // Terms are sorted by the full frequency vector, not by the k-th entry, so
  // bucket explicitly.
  std::vector<std::pair<Rational, std::vector<Term>>> buckets;
  std::vector<unsigned> degrees;
  for (const auto& t : p.terms()) {
    auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == t.freq[k]; });
    if (it == buckets.end()) {
      buckets.emplace_back(t.freq[k], std::vector<Term>{});
      degrees.push_back(0);
      it = std::prev(buckets.end());
    }
    const auto idx = static_cast<std::size_t>(it - buckets.begin());
    degrees[idx] = std::max(degrees[idx], t.mono[k]);
    Term reduced;
    reduced.coeff = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (i == k) continue;
      reduced.mono.push_back(t.mono[i]);
      reduced.freq.push_back(t.freq[i]);
    }
    it->second.push_back(std::move(reduced));
  }

  std::vector<FrequencyGroup> groups;
  groups.reserve(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    groups.push_back(FrequencyGroup{buckets[i].first, ExpPoly(rest, std::move(buckets[i].second)), degrees[i]});
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.freq < b.freq; });
  return groups;
}

std::string to_string(const ExpPoly& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.vars().names();
  std::ostringstream out;
  bool first_term = true;
  for (const auto& t : p.terms()) {
    if (!first_term) out << " + ";
    first_term = false;
    out << to_string(t.coeff) << " * ";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << ' ';
      out << names[i] << '^' << t.mono[i];
    }
    out << " * exp(";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << " + ";
      out << to_string(t.freq[i]) << '*' << names[i];
    }
    out << ')';
  }
  return out.str();
}

ExpPoly embed(const ExpPoly& p, const VarSet& target) {
  std::vector<std::size_t> map;
  map.reserve(p.vars().size());
  for (const auto& n : p.vars().names()) map.push_back(target.require(n));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term e{t.coeff, std::vector<unsigned>(target.size(), 0), std::vector<Rational>(target.size())};
    for (std::size_t i = 0; i < map.size(); ++i) {
      e.mono[map[i]] = t.mono[i];
      e.freq[map[i]] = t.freq[i];
    }
    terms.push_back(std::move(e));
  }
  return ExpPoly(target, std::move(terms));
}

ExpPoly rename(const ExpPoly& p, const VarSet& target) {
  if (target.size() != p.vars().size()) throw DimensionMismatch("rename target arity differs");
  return ExpPoly(target, std::vector<Term>(p.terms().begin(), p.terms().end()));
}

}  // namespace soliton
