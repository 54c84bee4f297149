#pragma once

// Exact exponential-polynomial ring over the rationals.
//
// An ExpPoly is a finite sum of terms
//
//     c * v_0^{m_0} ... v_{n-1}^{m_{n-1}} * exp(f_0 v_0 + ... + f_{n-1} v_{n-1})
//
// with rational c and f, non-negative integer m. Monomial-exponential
// products with distinct (m, f) are linearly independent, so equality of
// normal forms decides functional identities exactly.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soliton/rational.hpp"

namespace soliton {

/// Ordered list of unique, non-empty variable names. Order is fixed at
/// construction; term canonicalization relies on it.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  /// (t, x, y) for KP.
  static VarSet kp();
  /// (t, x) for KdV and mKdV.
  static VarSet kdv();
  /// (t, x1, ..., xd) for ZK and mZK; requires d >= 1.
  static VarSet zk(int dimension);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Index of `name`; throws UnknownVariable.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Copy without the variable at `index`.
  VarSet without(std::size_t index) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Term {
  Rational coeff;
  std::vector<unsigned> mono;
  std::vector<Rational> freq;

  friend bool operator==(const Term&, const Term&) = default;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

class ExpPoly {
 public:
  ExpPoly() = default;
  /// The zero element over `vars`.
  explicit ExpPoly(VarSet vars);
  /// Canonicalizes `terms`: merges like terms, drops zeros, sorts.
  ExpPoly(VarSet vars, std::vector<Term> terms);

  static ExpPoly constant(const VarSet& vars, const Rational& c);
  static ExpPoly exponential(const VarSet& vars, const Rational& c, std::vector<Rational> freq);
  static ExpPoly monomial(const VarSet& vars, const Rational& c, std::vector<unsigned> mono);
  static ExpPoly variable(const VarSet& vars, std::string_view name);

  const VarSet& vars() const noexcept { return vars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when no term carries a polynomial factor.
  bool is_pure_exponential() const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const ExpPoly& other);
  ExpPoly& operator*=(const Rational& scalar);

  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  friend ExpPoly operator*(ExpPoly lhs, const Rational& s) { return lhs *= s; }
  friend ExpPoly operator*(const Rational& s, ExpPoly rhs) { return rhs *= s; }
  ExpPoly operator-() const;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  void canonicalize();

  VarSet vars_;
  std::vector<Term> terms_;
};

/// Total order used for normal form: frequency vector lexicographically,
/// then monomial lexicographically.
bool term_order_less(const Term& a, const Term& b);

ExpPoly add(const ExpPoly& p, const ExpPoly& q);
ExpPoly mul(const ExpPoly& p, const ExpPoly& q);

/// `order`-fold partial derivative in `var`. Throws UnknownVariable.
ExpPoly diff(const ExpPoly& p, std::string_view var, unsigned order = 1);

/// p(A v + b): exponent frequencies map by the transpose of A, monomials
/// expand binomially. Constant exponential factors exp(f . b) are not in the
/// ring, so a term with f . b != 0 raises RangeError.
ExpPoly substitute_affine(const ExpPoly& p, const RationalMatrix& a, const std::vector<Rational>& b);

/// Double-precision value at `point`. Each term contributes one rounded
/// exponential and product, so the absolute error is bounded by roughly
/// size() * 4 ulp of the largest term magnitude. Throws RangeError when the
/// result overflows.
double eval(const ExpPoly& p, std::span<const double> point);

/// Value at a rational point. When every frequency dots to zero with the
/// point the sum is formed exactly before rounding.
double eval(const ExpPoly& p, std::span<const Rational> point);

/// p(point) * exp(-shift); lets callers evaluate ratios of large sums
/// without overflow.
double eval_scaled(const ExpPoly& p, std::span<const double> point, double shift);

/// max over terms of f . point, or 0 for the zero element.
double max_exponent(const ExpPoly& p, std::span<const double> point);

bool is_zero(const ExpPoly& p);
bool equals(const ExpPoly& p, const ExpPoly& q);

struct FrequencyGroup {
  Rational freq;
  /// Collected coefficient over the remaining variables, with any power of
  /// the grouped variable dropped.
  ExpPoly coeff;
  /// Highest residual power of the grouped variable inside the group.
  unsigned poly_degree = 0;
};

/// Partitions terms by their frequency in `var`, ascending.
std::vector<FrequencyGroup> group_by_frequency(const ExpPoly& p, std::string_view var);

/// `coeff * t^a x^b y^c * exp(f_t*t + f_x*x + f_y*y)` terms joined by ` + `;
/// `0` for the zero element.
std::string to_string(const ExpPoly& p);

/// Re-embeds p into `target`, which must contain every variable of p.
/// Variables absent from p get zero exponents and frequencies.
ExpPoly embed(const ExpPoly& p, const VarSet& target);

/// Renames variables positionally; `target` must have the same size.
ExpPoly rename(const ExpPoly& p, const VarSet& target);

}  // namespace soliton
