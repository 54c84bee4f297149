#pragma once

// Phase expression language.
//
//   expr  := line(a1,a2,k1,k2)
//          | vertical(k)
//          | resonant(k=[..],a=[..])
//          | resonant_general(k=[..],a1=[..],a2=[..])
//          | two(k1,k2,k3,k4) | two_unchecked(k1,k2,k3,k4)
//          | wr(expr,...)
//          | galilean(expr,beta)
//          | scale(expr,lambda,ysign)
//          | sum(term(c,[mx,my,mt],[fx,fy,ft]),...)
//
// Rationals are integers, p/q or decimals (converted exactly). Whitespace is
// ignored between tokens. The printer emits the canonical compact form.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "soliton/expalg.hpp"
#include "soliton/phases.hpp"

namespace soliton::dsl {

enum class NodeKind { Line, Vertical, Resonant, ResonantGeneral, TwoSoliton, TwoUnchecked, Wr, Galilean, Scale, RawSum };

/// One raw term; exponents and frequencies in (x, y, t) order as written.
struct RawTerm {
  Rational c;
  std::array<unsigned, 3> mono{};
  std::array<Rational, 3> freq{};

  friend bool operator==(const RawTerm&, const RawTerm&) = default;
};

struct PhaseExpr {
  NodeKind kind = NodeKind::Line;
  /// Positional rationals: line/two (4), vertical (1), galilean (beta),
  /// scale (lambda, ysign).
  std::vector<Rational> args;
  std::vector<Rational> k;
  std::vector<Rational> a;
  std::vector<Rational> a2;
  std::vector<PhaseExpr> children;
  std::vector<RawTerm> terms;

  friend bool operator==(const PhaseExpr&, const PhaseExpr&) = default;
};

/// Syntax only; throws ParseError with the byte offset.
PhaseExpr parse_syntax(std::string_view text);

/// Syntax plus constraint validation; constraint violations raise SemanticError.
PhaseExpr parse(std::string_view text);

std::string print(const PhaseExpr& expr);

/// Builds the phase; constructor constraint violations raise SemanticError.
Phase lower(const PhaseExpr& expr);

/// Parses a phase expression and builds it.
Phase parse_phase(std::string_view text);

/// Reads the canonical ExpPoly serialization produced by to_string(ExpPoly).
ExpPoly parse_exppoly(std::string_view text, const VarSet& vars);

}  // namespace soliton::dsl
