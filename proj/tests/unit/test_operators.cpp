#include <gtest/gtest.h>

#include <vector>

#include "soliton/error.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"
#include "support.hpp"

using namespace soliton;

namespace {

const VarSet kp = VarSet::kp();
const VarSet kdv = VarSet::kdv();

const ExpPoly& named(const std::vector<OperatorResult>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return r.expr;
  }
  throw ConstraintError("missing " + name);
}

}  // namespace

TEST(Operators, HeatAndAiryVanishOnSingleExponentials) {
  const ExpPoly e = ExpPoly::exponential(kp, 3, kp_frequency(Rational(2, 3)));
  EXPECT_TRUE(heat(e).is_zero());
  EXPECT_TRUE(airy(e).is_zero());
  EXPECT_TRUE(wy_cleared(e).is_zero());
}

TEST(Operators, LineSolitonWyOracle) {
  // a1 a2 (k1^2 - k2^2)^2 e^{theta1 + theta2} with (1, 1, -1/2, 1): 9/16
  const ExpPoly th = line_soliton(1, 1, Rational(-1, 2), 1).theta;
  EXPECT_EQ(to_string(wy_cleared(th).expr), "9/16 * t^0 x^0 y^0 * exp(7/8*t + 1/2*x + 5/4*y)");
  EXPECT_EQ(wx_cleared(th).expr, wy_cleared(th).expr);
  EXPECT_EQ(wy_cleared(th).cleared_by, 1);
}

TEST(Operators, TwoSolitonHeatAndAiryFormulas) {
  const std::vector<Rational> k{-1, Rational(-1, 2), Rational(1, 2), 1};
  const ExpPoly th = two_soliton(k[0], k[1], k[2], k[3]).theta;
  ExpPoly h(kp), ai(kp);
  for (int i : {0, 1}) {
    for (int j : {2, 3}) {
      auto f = kp_frequency(k[i]);
      const auto g = kp_frequency(k[j]);
      for (std::size_t v = 0; v < 3; ++v) f[v] += g[v];
      const ExpPoly e = ExpPoly::exponential(kp, k[j] - k[i], f);
      h += Rational(-2) * k[i] * k[j] * e;
      ai += Rational(-3) * k[i] * k[j] * (k[i] + k[j]) * e;
    }
  }
  EXPECT_EQ(heat(th).expr, h);
  EXPECT_EQ(airy(th).expr, ai);
  EXPECT_TRUE(t_operator_cleared(th).is_zero());
}

TEST(Operators, NonSolutionHasNonzeroResidual) {
  // 1 + e^{lt + kx + my} solves KP iff -4kl + k^4 + 3m^2 = 0
  EXPECT_TRUE(kp_residual_cleared(ExpPoly::constant(kp, 1) + ExpPoly::exponential(kp, 1, {1, 1, 1})).is_zero());
  const ExpPoly th = ExpPoly::constant(kp, 1) + ExpPoly::exponential(kp, 1, {1, 1, 2});
  EXPECT_FALSE(kp_residual_cleared(th).is_zero());
  EXPECT_EQ(kp_residual_cleared(th).expr, t_operator_cleared(th).expr);
}

TEST(Operators, VarSetChecked) {
  const ExpPoly k = ExpPoly::constant(kdv, 1);
  EXPECT_THROW(heat(k), Error);
  EXPECT_THROW(companion_ops(ExpPoly::constant(kp, 1), Model::KdV), Error);
}

TEST(Operators, KdvCompanionOracles) {
  const ExpPoly one = ExpPoly::constant(kdv, 1);
  const ExpPoly soliton = one + ExpPoly::exponential(kdv, 1, {Rational(1, 4), 1});
  const auto ops = companion_ops(soliton, Model::KdV);
  EXPECT_TRUE(named(ops, "kdv_ai").is_zero());
  EXPECT_TRUE(named(ops, "kdv_w").is_zero());
  EXPECT_TRUE(named(ops, "kdv_T").is_zero());
  // the opposite time sign is not a solution
  const ExpPoly flipped = one + ExpPoly::exponential(kdv, 1, {Rational(-1, 4), 1});
  EXPECT_EQ(named(companion_ops(flipped, Model::KdV), "kdv_ai"),
            ExpPoly::exponential(kdv, 2, {Rational(-1, 4), 1}));

  const ExpPoly cubic = ExpPoly::monomial(kdv, 1, {1, 0}) + ExpPoly::monomial(kdv, Rational(2, 3), {0, 3}) + one;
  const auto c = companion_ops(cubic, Model::KdV);
  EXPECT_TRUE(named(c, "kdv_ai").is_zero());
  EXPECT_EQ(named(c, "kdv_w"), ExpPoly::monomial(kdv, 8, {0, 2}));
}

TEST(Operators, MkdvMandelazo) {
  for (const Rational k : {Rational(1), Rational(-2), Rational(3, 2)}) {
    const ExpPoly th = ExpPoly::exponential(kdv, 1, {k * k * k / 4, k});
    const auto ops = companion_ops(th, Model::mKdV);
    EXPECT_TRUE(named(ops, "mkdv_res").is_zero()) << to_string(k);
  }
  const ExpPoly bad = ExpPoly::exponential(kdv, 1, {1, 1});
  EXPECT_FALSE(named(companion_ops(bad, Model::mKdV), "mkdv_res").is_zero());
}

TEST(Operators, ZkLiftsOfKdvSoliton) {
  const ExpPoly soliton = ExpPoly::constant(kdv, 1) + ExpPoly::exponential(kdv, 1, {Rational(2), 2});
  for (int d = 2; d <= 3; ++d) {
    const ExpPoly lifted = embed(rename(soliton, VarSet({"t", "x1"})), VarSet::zk(d));
    for (const auto& r : companion_ops(lifted, Model::ZK, d)) EXPECT_TRUE(r.is_zero()) << r.name << " d=" << d;
  }
}

TEST(Operators, ApplyOperatorByName) {
  const ExpPoly th = line_soliton(1, 1, -1, 2).theta;
  for (const auto& name : {"heat", "airy", "wx", "wy", "T", "kp_residual"}) {
    const auto rs = apply_operator(name, th);
    ASSERT_FALSE(rs.empty()) << name;
  }
  EXPECT_THROW(apply_operator("nope", th), Error);
}

TEST(Operators, ModelNames) {
  EXPECT_EQ(model_from_string("kdv"), Model::KdV);
  EXPECT_EQ(model_from_string("mZK"), Model::mZK);
  EXPECT_EQ(profile_from_string("arctan2"), Profile::Arctan2);
  EXPECT_THROW(model_from_string("burgers"), Error);
}

TEST(OperatorsProperty, HeatTypeGivesEqualWronskians) {
  auto r = test::rng(20);
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = static_cast<std::size_t>(r.uniform_int(1, 5));
    std::vector<Rational> a;
    for (std::size_t j = 0; j < m; ++j) a.push_back(r.positive());
    const ExpPoly th = resonant(a, r.sorted_distinct(m)).theta;
    ASSERT_TRUE(heat(th).is_zero());
    EXPECT_EQ(wx_cleared(th).expr, wy_cleared(th).expr) << test::seed_note();
    EXPECT_TRUE(airy(th).is_zero()) << test::seed_note();
  }
}

TEST(OperatorsProperty, ClearedResidualIsHomogeneous) {
  // homogeneous of degree cleared_by in Theta
  auto r = test::rng(21);
  for (int i = 0; i < 30; ++i) {
    const ExpPoly th = r.exppoly(kp, 3, 1);
    const Rational c = r.positive();
    const auto base = kp_residual_cleared(th);
    EXPECT_EQ(kp_residual_cleared(c * th).expr, pow(c, static_cast<unsigned>(base.cleared_by)) * base.expr)
        << test::seed_note();
  }
}
