#include <gtest/gtest.h>

#include <vector>

#include "soliton/error.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"
#include "support.hpp"

using namespace soliton;

namespace {
const VarSet kp = VarSet::kp();
}

TEST(Phases, KpFrequency) { EXPECT_EQ(kp_frequency(Rational(1, 2)), (std::vector<Rational>{Rational(1, 8), Rational(1, 2), Rational(1, 4)})); }

TEST(Phases, LineSolitonOracle) {
  const Phase p = line_soliton(1, 1, Rational(-1, 2), 1);
  const ExpPoly expected = ExpPoly::exponential(kp, 1, kp_frequency(Rational(-1, 2))) +
                           ExpPoly::exponential(kp, 1, kp_frequency(1));
  EXPECT_EQ(p.theta, expected);
  EXPECT_EQ(p.spec.kind, PhaseKind::Line);
}

TEST(Phases, ConstructorConstraints) {
  EXPECT_THROW(line_soliton(1, 1, 1, 1), ConstraintError);
  EXPECT_THROW(line_soliton(0, 1, 0, 1), ConstraintError);
  EXPECT_THROW(two_soliton(1, 0, 2, 3), ConstraintError);
  const std::vector<Rational> k{1, 1}, a{1, 1};
  EXPECT_THROW(resonant(a, k), ConstraintError);
  const std::vector<Rational> k2{0, 1}, a1{1};
  EXPECT_THROW(resonant(a1, k2), ConstraintError);
}

TEST(Phases, TwoSolitonOracle) {
  // Theta = sum (k_j - k_i) e^{theta_i + theta_j} over (1,3),(1,4),(2,3),(2,4)
  const Phase p = two_soliton(-1, Rational(-1, 2), Rational(1, 2), 1);
  EXPECT_EQ(to_string(p.theta),
            "3/2 * t^0 x^0 y^0 * exp(-7/8*t + -1/2*x + 5/4*y) + 1 * t^0 x^0 y^0 * exp(0*t + 0*x + 1/2*y) + "
            "2 * t^0 x^0 y^0 * exp(0*t + 0*x + 2*y) + 3/2 * t^0 x^0 y^0 * exp(7/8*t + 1/2*x + 5/4*y)");
}

TEST(Phases, KdvVerticalHasNoYWronskian) {
  // Theta = 2 e^{k^2 y} cosh(kx + k^3 t): y enters only through a gauge factor
  const Phase p = kdv_vertical(2);
  EXPECT_FALSE(diff(p.theta, "y").is_zero());
  EXPECT_TRUE(wy_cleared(p.theta).is_zero());
  EXPECT_TRUE(kp_residual_cleared(p.theta).is_zero());
}

TEST(Phases, WronskianOfDependentRowsVanishes) {
  const ExpPoly e1 = ExpPoly::exponential(kp, 1, kp_frequency(1));
  const std::vector<ExpPoly> same{e1, Rational(3) * e1};
  EXPECT_TRUE(wronskian(same).is_zero());
}

TEST(PhasesProperty, TwoSolitonIsWronskianOfLines) {
  auto r = test::rng(12);
  for (int i = 0; i < 30; ++i) {
    const auto k = r.sorted_distinct(4);
    const Phase w = wronskian_phase(std::vector<Phase>{line_soliton(1, 1, k[0], k[1]), line_soliton(1, 1, k[2], k[3])});
    EXPECT_EQ(w.theta, two_soliton(k[0], k[1], k[2], k[3]).theta) << test::seed_note();
  }
}

TEST(Phases, ResonantGeneralReducesToVertical) {
  const std::vector<Rational> one{1}, k{Rational(3, 2)};
  EXPECT_EQ(resonant_general(one, one, k).theta, kdv_vertical(Rational(3, 2)).theta);
}

TEST(Phases, GalileanIdentityAtZero) {
  const Phase p = line_soliton(1, 2, -1, 2);
  EXPECT_EQ(galilean(p, 0).theta, p.theta);
  EXPECT_EQ(scale(p, 1, 1).theta, p.theta);
  EXPECT_THROW(scale(p, 1, 2), ConstraintError);
}

TEST(Phases, SpecJsonRoundTrip) {
  const Phase p = galilean(wronskian_phase(std::vector<Phase>{line_soliton(1, 1, -1, 0), line_soliton(1, 1, 1, 2)}), Rational(1, 3));
  const PhaseSpec back = phase_spec_from_json(to_json(p.spec));
  EXPECT_EQ(back, p.spec);
  EXPECT_EQ(build(back).theta, p.theta);
}

TEST(PhasesProperty, GalileanComposesAdditively) {
  auto r = test::rng(10);
  for (int i = 0; i < 30; ++i) {
    auto k = r.sorted_distinct(2);
    const Phase p = line_soliton(r.positive(), r.positive(), k[0], k[1]);
    const Rational b1 = r.rational(), b2 = r.rational();
    EXPECT_EQ(galilean(galilean(p, b1), b2).theta, galilean(p, b1 + b2).theta) << test::seed_note();
  }
}

TEST(PhasesProperty, SymmetriesPreserveKpResidual) {
  auto r = test::rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto k = r.sorted_distinct(3);
    const std::vector<Rational> a{r.positive(), r.positive(), r.positive()};
    const Phase p = resonant(a, k);
    EXPECT_TRUE(kp_residual_cleared(galilean(p, r.rational()).theta).is_zero()) << test::seed_note();
    EXPECT_TRUE(kp_residual_cleared(scale(p, r.positive(), i % 2 ? 1 : -1).theta).is_zero()) << test::seed_note();
  }
}
