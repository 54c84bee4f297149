#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace soliton {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Parses `p`, `-p`, `p/q` or a finite decimal such as `-0.3` into an exact
/// rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, otherwise `p/q` in lowest terms.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact square root if `value` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace soliton
