#include <gtest/gtest.h>

#include <vector>

#include "json.hpp"
#include "soliton/cones.hpp"
#include "soliton/error.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"
#include "support.hpp"

using namespace soliton;

namespace {

const VarSet kp = VarSet::kp();

ConeDecomposition wy_of(const Phase& p) { return decompose(wy_cleared(p.theta).expr, "y"); }

}  // namespace

TEST(Cones, DecomposeFlags) {
  const ExpPoly pos = ExpPoly::exponential(kp, 2, {0, 1, 1}) + ExpPoly::exponential(kp, 3, {0, 0, 2});
  auto d = decompose(pos);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.strict_dim(), std::size_t{2});
  EXPECT_TRUE(d.in_cone(2));
  EXPECT_FALSE(d.in_cone(1));

  const ExpPoly neg = ExpPoly::exponential(kp, -1, {0, 0, 1});
  d = decompose(neg);
  EXPECT_FALSE(d.flags.all_coeff_syntactically_positive);
  EXPECT_FALSE(d.strict_dim().has_value());
  EXPECT_EQ(d.signed_dim(), std::size_t{1});

  const ExpPoly poly = ExpPoly(kp, {Term{1, {0, 0, 1}, {0, 0, 1}}});
  d = decompose(poly);
  EXPECT_FALSE(d.flags.no_poly_prefactor);
  EXPECT_FALSE(d.signed_dim().has_value());

  d = decompose(ExpPoly::exponential(kp, 1, {0, 0, -1}));
  EXPECT_FALSE(d.flags.all_freq_nonneg);
  EXPECT_THROW(decompose(pos, "z"), Error);
}

TEST(Cones, YSolitonClassification) {
  const std::vector<Rational> k{Rational(-3, 10), 0, Rational(1, 2)}, a{1, 1, 1};
  const auto rep = classify(resonant(a, k).theta);
  EXPECT_TRUE(rep.heat_zero);
  EXPECT_TRUE(rep.airy_zero);
  EXPECT_TRUE(rep.wx_eq_wy);
  EXPECT_EQ(rep.wy_cone_dim, std::size_t{3});
  EXPECT_EQ(rep.theorem_flags.resonant_M, 3);
  EXPECT_FALSE(rep.theorem_flags.two_soliton);
}

TEST(Cones, LineAndVerticalClassification) {
  const auto line = classify(line_soliton(1, 1, Rational(-1, 2), 1).theta);
  EXPECT_TRUE(line.theorem_flags.oblique_line);
  EXPECT_EQ(line.theorem_flags.resonant_M, 2);
  const auto vert = classify(kdv_vertical(1).theta);
  EXPECT_TRUE(vert.theorem_flags.kdv_vertical);
  EXPECT_TRUE(vert.theorem_flags.oblique_line);
  EXPECT_EQ(vert.theorem_flags.resonant_M, 2);
  EXPECT_EQ(vert.wy_cone_dim, std::size_t{0});
}

TEST(Cones, TwoSolitonClassification) {
  const auto rep = classify(two_soliton(-3, -1, 2, 5).theta);
  EXPECT_FALSE(rep.heat_zero);
  EXPECT_FALSE(rep.airy_zero);
  EXPECT_TRUE(rep.airy_heat_identity);
  EXPECT_TRUE(rep.t_zero);
  EXPECT_EQ(rep.wy_cone_dim, std::size_t{5});
  EXPECT_TRUE(rep.theorem_flags.two_soliton);
  EXPECT_FALSE(rep.theorem_flags.resonant_M.has_value());
}

TEST(Cones, SymmetricTwoSolitonIsInW5) {
  // symmetric wave numbers merge y-frequencies, so the dimensions drop below 5
  const auto rep = classify(two_soliton(-1, Rational(-1, 2), Rational(1, 2), 1).theta);
  EXPECT_EQ(rep.wy_cone_dim, std::size_t{3});
  EXPECT_EQ(rep.wx_cone_dim, std::size_t{2});
  EXPECT_TRUE(rep.theorem_flags.two_soliton);
}

TEST(Cones, ClassifyRejectsOtherVarSets) {
  EXPECT_THROW(classify(ExpPoly::constant(VarSet::kdv(), 1)), VarSetMismatch);
}

TEST(Cones, ReportJsonFieldNames) {
  const auto j = nlohmann::json::parse(to_json(classify(line_soliton(1, 2, -1, 1).theta)));
  for (const char* key : {"heat_zero", "airy_zero", "wx_eq_wy", "kp_residual_zero", "t_zero", "trivial_kernel",
                          "wy_cone_dim", "wx_cone_dim", "theorem_flags", "notes"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  // k1 = -k2 gives W_y = 0
  EXPECT_EQ(j["wy_cone_dim"], 0);
}

TEST(Cones, ReconstructOracle) {
  const std::vector<Rational> k{1, 2, 4}, a{1, 2, 3};
  const auto r = reconstruct_resonant(wy_of(resonant(a, k)), 3);
  ASSERT_TRUE(r.ok()) << r.diagnostic;
  EXPECT_EQ(r.data->k, k);
  EXPECT_EQ(r.data->a, a);
}

TEST(Cones, ReconstructLineSoliton) {
  const std::vector<Rational> k{Rational(-1, 2), 1}, a{1, 3};
  const auto r = reconstruct_resonant(wy_of(resonant(a, k)), 2);
  ASSERT_TRUE(r.ok()) << r.diagnostic;
  EXPECT_EQ(r.data->k, k);
  EXPECT_EQ(r.data->a, a);
}

TEST(Cones, ReconstructRejects) {
  const auto two = wy_of(two_soliton(-1, Rational(-1, 2), Rational(1, 2), 1));
  for (int m = 2; m <= 5; ++m) EXPECT_FALSE(reconstruct_resonant(two, m).ok()) << m;
  const std::vector<Rational> k{1, 2, 4}, a{1, 2, 3};
  const auto wrong_m = reconstruct_resonant(wy_of(resonant(a, k)), 4);
  EXPECT_FALSE(wrong_m.ok());
  EXPECT_FALSE(wrong_m.diagnostic.empty());
}

TEST(ConesProperty, ReconstructionRoundTrip) {
  auto rng = test::rng(30);
  int tried = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = static_cast<std::size_t>(2 + i % 4);
    const auto k = rng.sorted_distinct(m, 6, 3);
    std::vector<Rational> a;
    for (std::size_t j = 0; j < m; ++j) a.push_back(rng.positive());
    const auto d = wy_of(resonant(a, k));
    if (d.size() != m * (m - 1) / 2) continue;  // collisions are not reconstructible
    ++tried;
    const auto r = reconstruct_resonant(d, static_cast<int>(m));
    ASSERT_TRUE(r.ok()) << r.diagnostic << " " << test::seed_note();
    EXPECT_EQ(r.data->k, k) << test::seed_note();
    // M = 2 only determines a1 a2; the gauge is a1 = 1
    const std::vector<Rational> want = m == 2 ? std::vector<Rational>{1, a[0] * a[1]} : a;
    EXPECT_EQ(r.data->a, want) << test::seed_note();
  }
  EXPECT_GT(tried, 20);
}

TEST(ConesProperty, ResonantDimensionBound) {
  auto rng = test::rng(31);
  for (int i = 0; i < 80; ++i) {
    const std::size_t m = static_cast<std::size_t>(1 + i % 6);
    std::vector<Rational> a;
    for (std::size_t j = 0; j < m; ++j) a.push_back(rng.positive());
    const auto d = wy_of(resonant(a, rng.sorted_distinct(m, 4, 2)));
    ASSERT_TRUE(d.strict_dim().has_value()) << test::seed_note();
    EXPECT_LE(*d.strict_dim(), m * (m - 1) / 2) << test::seed_note();
  }
}
