#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "soliton/dsl.hpp"
#include "soliton/error.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"
#include "support.hpp"

using namespace soliton;

TEST(Dsl, ParsesLine) {
  const auto e = dsl::parse("line(1,1,-1/2,1)");
  EXPECT_EQ(e.kind, dsl::NodeKind::Line);
  EXPECT_EQ(e.args, (std::vector<Rational>{1, 1, Rational(-1, 2), 1}));
  EXPECT_EQ(dsl::print(e), "line(1,1,-1/2,1)");
}

TEST(Dsl, ParsesTwoSoliton) {
  const auto e = dsl::parse("two(-1, -1/2, 1/2, 1)");
  EXPECT_EQ(e.kind, dsl::NodeKind::TwoSoliton);
  EXPECT_EQ(dsl::lower(e).theta, two_soliton(-1, Rational(-1, 2), Rational(1, 2), 1).theta);
}

TEST(Dsl, DecimalsAreExact) { EXPECT_EQ(dsl::parse("line(0.5,1,-0.25,1)").args[2], Rational(-1, 4)); }

TEST(Dsl, ResonantKeywordsInAnyOrder) {
  const auto a = dsl::parse("resonant(k=[-3/10,0,1/2],a=[1,1,1])");
  const auto b = dsl::parse("resonant(a=[1,1,1],k=[-3/10,0,1/2])");
  EXPECT_EQ(a, b);
  EXPECT_EQ(dsl::print(b), "resonant(k=[-3/10,0,1/2],a=[1,1,1])");
}

TEST(Dsl, RawSumUsesXYTOrder) {
  // term(c,[mx,my,mt],[fx,fy,ft])
  const Phase p = dsl::parse_phase("sum(term(2,[1,0,3],[1/2,0,-1]))");
  const ExpPoly expected(VarSet::kp(), {Term{2, {3, 1, 0}, {-1, Rational(1, 2), 0}}});
  EXPECT_EQ(p.theta, expected);
}

TEST(Dsl, SyntaxErrorsCarryOffsets) {
  try {
    dsl::parse("line(1,1,1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(dsl::parse("lime(1,1,1,2)"), ParseError);
  EXPECT_THROW(dsl::parse("line(1,1,1,2) extra"), ParseError);
  EXPECT_THROW(dsl::parse("line(1,1,1/0,2)"), ParseError);
  EXPECT_THROW(dsl::parse("line(1,1,2)"), Error);
}

TEST(Dsl, SemanticErrors) {
  EXPECT_THROW(dsl::parse("line(1,1,1,1)"), SemanticError);
  EXPECT_THROW(dsl::parse("two(1,0,2,3)"), SemanticError);
  EXPECT_THROW(dsl::parse("resonant(k=[2,1],a=[1,1])"), SemanticError);
  EXPECT_THROW(dsl::parse("scale(line(1,1,0,1),2,3)"), SemanticError);
  EXPECT_NO_THROW(dsl::parse_syntax("line(1,1,1,1)"));
}

TEST(Dsl, NestedTransforms) {
  const Phase p = dsl::parse_phase("galilean(scale(line(1,1,-1,1),2,-1),1/2)");
  EXPECT_EQ(p.theta, galilean(scale(line_soliton(1, 1, -1, 1), 2, -1), Rational(1, 2)).theta);
  EXPECT_TRUE(kp_residual_cleared(p.theta).is_zero());
}

TEST(Dsl, ExpPolyTextRoundTrip) {
  const ExpPoly th = two_soliton(-3, -1, 2, 5).theta;
  EXPECT_EQ(dsl::parse_exppoly(to_string(th), VarSet::kp()), th);
  EXPECT_TRUE(dsl::parse_exppoly("0", VarSet::kp()).is_zero());
  const ExpPoly kdv = ExpPoly::exponential(VarSet::kdv(), Rational(-2, 3), {Rational(1, 4), 1});
  EXPECT_EQ(dsl::parse_exppoly(to_string(kdv), VarSet::kdv()), kdv);
  EXPECT_THROW(dsl::parse_exppoly("1 * q^1 * exp(0*q)", VarSet::kdv()), Error);
}

TEST(DslProperty, RandomAstRoundTrip) {
  auto rng = test::rng(50);
  auto lit = [&] { return to_string(rng.rational()); };
  auto pos = [&] { return to_string(rng.positive()); };
  auto ks = [&](std::size_t n) {
    std::string s = "[";
    const auto k = rng.sorted_distinct(n);
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + to_string(k[i]);
    return s + "]";
  };
  auto as = [&](std::size_t n) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + pos();
    return s + "]";
  };
  for (int i = 0; i < 100; ++i) {
    std::string text;
    switch (i % 5) {
      case 0: {
        const auto k = rng.sorted_distinct(2);
        text = "line(" + pos() + "," + pos() + "," + to_string(k[0]) + "," + to_string(k[1]) + ")";
        break;
      }
      case 1: {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
        text = "resonant(k=" + ks(n) + ",a=" + as(n) + ")";
        break;
      }
      case 2: {
        const auto k = rng.sorted_distinct(4);
        text = "galilean(two(" + to_string(k[0]) + "," + to_string(k[1]) + "," + to_string(k[2]) + "," +
               to_string(k[3]) + ")," + lit() + ")";
        break;
      }
      case 3:
        text = "scale(vertical(" + pos() + ")," + pos() + "," + (i % 2 ? "1" : "-1") + ")";
        break;
      default:
        text = "sum(term(" + pos() + ",[0,1,0],[" + lit() + ",0," + lit() + "]),term(" + lit() + ",[0,0,0],[0,0,0]))";
        break;
    }
    try {
      const auto ast = dsl::parse(text);
      EXPECT_EQ(dsl::parse(dsl::print(ast)), ast) << text << " " << test::seed_note();
    } catch (const SemanticError&) {
      // random raw sums may degenerate to zero
    }
  }
}
