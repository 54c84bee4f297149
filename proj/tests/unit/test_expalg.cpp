#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "soliton/error.hpp"
#include "soliton/expalg.hpp"
#include "support.hpp"

using namespace soliton;

namespace {

const VarSet kp = VarSet::kp();

ExpPoly term(const Rational& c, std::vector<unsigned> mono, std::vector<Rational> freq) {
  return ExpPoly(kp, {Term{c, std::move(mono), std::move(freq)}});
}

}  // namespace

TEST(ExpPoly, CanonicalFormMergesAndDropsZeros) {
  const ExpPoly a = term(2, {0, 1, 0}, {0, 1, 0});
  const ExpPoly b = term(-2, {0, 1, 0}, {0, 1, 0});
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(to_string(a + b), "0");
  EXPECT_EQ((a + a).size(), 1u);
  EXPECT_EQ((a + a), Rational(2) * a);
}

TEST(ExpPoly, SerializationIsFrozen) {
  const ExpPoly p = term(Rational(-1, 2), {1, 0, 2}, {Rational(1, 8), Rational(1, 2), Rational(1, 4)}) +
                    ExpPoly::constant(kp, 1);
  EXPECT_EQ(to_string(p),
            "1 * t^0 x^0 y^0 * exp(0*t + 0*x + 0*y) + "
            "-1/2 * t^1 x^0 y^2 * exp(1/8*t + 1/2*x + 1/4*y)");
}

TEST(ExpPoly, ProductAddsFrequencies) {
  const ExpPoly e1 = ExpPoly::exponential(kp, 2, {1, 2, 3});
  const ExpPoly e2 = ExpPoly::exponential(kp, 3, {-1, 0, Rational(1, 2)});
  EXPECT_EQ(e1 * e2, ExpPoly::exponential(kp, 6, {0, 2, Rational(7, 2)}));
}

TEST(ExpPoly, DerivativeOracle) {
  // d/dx x^2 e^{3x} = 2x e^{3x} + 3x^2 e^{3x}
  const ExpPoly p = term(1, {0, 2, 0}, {0, 3, 0});
  EXPECT_EQ(diff(p, "x"), term(2, {0, 1, 0}, {0, 3, 0}) + term(3, {0, 2, 0}, {0, 3, 0}));
  EXPECT_EQ(diff(p, "y"), ExpPoly(kp));
  EXPECT_EQ(diff(p, "x", 3), diff(diff(diff(p, "x"), "x"), "x"));
  EXPECT_THROW(diff(p, "z"), UnknownVariable);
}

TEST(ExpPoly, VarSetMismatchThrows) {
  const ExpPoly a = ExpPoly::constant(kp, 1);
  const ExpPoly b = ExpPoly::constant(VarSet::kdv(), 1);
  EXPECT_THROW(a + b, VarSetMismatch);
  EXPECT_THROW(a * b, VarSetMismatch);
}

TEST(ExpPoly, SubstituteAffine) {
  // x -> x + 2y applied to x e^{x}
  const RationalMatrix a{{1, 0, 0}, {0, 1, 2}, {0, 0, 1}};
  const ExpPoly p = term(1, {0, 1, 0}, {0, 1, 0});
  const ExpPoly expected = term(1, {0, 1, 0}, {0, 1, 2}) + term(2, {0, 0, 1}, {0, 1, 2});
  EXPECT_EQ(substitute_affine(p, a, {0, 0, 0}), expected);
  // a polynomial shift is fine, an exponential one leaves the ring
  EXPECT_EQ(substitute_affine(term(1, {0, 1, 0}, {0, 0, 0}), a, {0, 1, 0}),
            term(1, {0, 1, 0}, {0, 0, 0}) + term(2, {0, 0, 1}, {0, 0, 0}) + ExpPoly::constant(kp, 1));
  EXPECT_THROW(substitute_affine(p, a, {0, 1, 0}), RangeError);
}

TEST(ExpPoly, EvalOracle) {
  const ExpPoly p = term(3, {0, 1, 0}, {0, 1, 0}) + ExpPoly::constant(kp, 1);
  const std::vector<double> pt{0.0, 2.0, 5.0};
  EXPECT_NEAR(eval(p, pt), 1.0 + 6.0 * std::exp(2.0), 1e-12);
  EXPECT_NEAR(eval_scaled(p, pt, max_exponent(p, pt)), (1.0 + 6.0 * std::exp(2.0)) * std::exp(-2.0), 1e-12);
}

TEST(ExpPoly, GroupByFrequency) {
  const ExpPoly p = ExpPoly::exponential(kp, 1, {0, 1, 2}) + ExpPoly::exponential(kp, 1, {0, 3, 2}) +
                    term(1, {0, 0, 1}, {0, 0, 1});
  const auto groups = group_by_frequency(p, "y");
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].freq, Rational(1));
  EXPECT_EQ(groups[0].poly_degree, 1u);
  EXPECT_EQ(groups[1].freq, Rational(2));
  EXPECT_EQ(groups[1].coeff.size(), 2u);
}

TEST(ExpPoly, EmbedAndRename) {
  const ExpPoly k = ExpPoly::exponential(VarSet::kdv(), 2, {1, 3});
  EXPECT_EQ(embed(k, kp), ExpPoly::exponential(kp, 2, {1, 3, 0}));
  const ExpPoly r = rename(k, VarSet({"t", "x1"}));
  EXPECT_EQ(r.vars().names(), (std::vector<std::string>{"t", "x1"}));
  EXPECT_THROW(rename(k, kp), DimensionMismatch);
}

// Ring axioms and the Leibniz rule on random elements.
TEST(ExpPolyProperty, RingAxiomsAndLeibniz) {
  auto r = test::rng(2);
  for (int i = 0; i < 60; ++i) {
    const ExpPoly a = r.exppoly(kp, 3, 2), b = r.exppoly(kp, 3, 2), c = r.exppoly(kp, 2, 1);
    EXPECT_EQ(a * (b + c), a * b + a * c) << test::seed_note();
    EXPECT_EQ((a * b) * c, a * (b * c)) << test::seed_note();
    EXPECT_EQ(a * b, b * a) << test::seed_note();
    EXPECT_TRUE((a - a).is_zero()) << test::seed_note();
    for (const char* v : {"t", "x", "y"}) {
      EXPECT_EQ(diff(a * b, v), diff(a, v) * b + a * diff(b, v)) << v << " " << test::seed_note();
    }
    EXPECT_EQ(diff(diff(a, "x"), "y"), diff(diff(a, "y"), "x")) << test::seed_note();
  }
}

TEST(ExpPolyProperty, EvalIsAHomomorphism) {
  auto r = test::rng(3);
  for (int i = 0; i < 60; ++i) {
    const ExpPoly a = r.exppoly(kp, 3, 2), b = r.exppoly(kp, 3, 2);
    const std::vector<double> pt{0.3 * r.uniform_int(-3, 3), 0.25 * r.uniform_int(-4, 4), 0.2 * r.uniform_int(-5, 5)};
    const double va = eval(a, pt), vb = eval(b, pt);
    const double scale = 1.0 + std::abs(va * vb) + std::abs(va) + std::abs(vb);
    EXPECT_NEAR(eval(a * b, pt), va * vb, 1e-9 * scale) << test::seed_note();
    EXPECT_NEAR(eval(a + b, pt), va + vb, 1e-9 * scale) << test::seed_note();
  }
}

TEST(ExpPolyProperty, NormalFormIsSorted) {
  auto r = test::rng(4);
  for (int i = 0; i < 40; ++i) {
    const ExpPoly a = r.exppoly(kp, 4, 2) * r.exppoly(kp, 3, 1);
    const auto terms = a.terms();
    for (std::size_t j = 1; j < terms.size(); ++j) {
      EXPECT_TRUE(term_order_less(terms[j - 1], terms[j])) << test::seed_note();
    }
  }
}
