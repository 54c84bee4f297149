#include <gtest/gtest.h>

#include "json.hpp"
#include "soliton/error.hpp"
#include "soliton/report.hpp"

using namespace soliton;
using nlohmann::json;

namespace {

const json* find_op(const json& ops, const std::string& name) {
  for (const auto& o : ops) {
    if (o["name"] == name) return &o;
  }
  return nullptr;
}

}  // namespace

TEST(Report, CheckTwoSoliton) {
  CheckOptions o;
  o.expr = "two(-1,-1/2,1/2,1)";
  o.ops = {"airy", "heat", "T"};
  o.expect_zero = {"T"};
  o.expect_nonzero = {"airy", "heat"};
  const auto r = run_check(o);
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.json);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["version"], version());
  const json& ops = j["operators"];
  ASSERT_NE(find_op(ops, "T"), nullptr);
  EXPECT_TRUE((*find_op(ops, "T"))["zero"].get<bool>());
  EXPECT_FALSE((*find_op(ops, "airy"))["zero"].get<bool>());
  EXPECT_FALSE((*find_op(ops, "heat"))["zero"].get<bool>());
}

TEST(Report, FailedExpectationExitsOne) {
  CheckOptions o;
  o.expr = "two(-1,-1/2,1/2,1)";
  o.expect_zero = {"heat"};
  EXPECT_EQ(run_check(o).exit_code, 1);
}

TEST(Report, CompanionModelCheck) {
  CheckOptions o;
  o.expr = "1 * t^0 x^0 * exp(0*t + 0*x) + 1 * t^0 x^0 * exp(1/4*t + 1*x)";
  o.model = Model::KdV;
  o.expect_zero = {"kdv_ai", "kdv_w", "kdv_T"};
  EXPECT_EQ(run_check(o).exit_code, 0);
}

TEST(Report, ResolvePhaseProjectsForKdv) {
  const auto p = resolve_phase("vertical(1)", Model::KdV);
  EXPECT_EQ(p.theta.vars(), VarSet::kdv());
  const auto z = resolve_phase("vertical(1)", Model::ZK, 3);
  EXPECT_EQ(z.theta.vars(), VarSet::zk(3));
  EXPECT_THROW(resolve_phase("line(1,1", Model::KP), ParseError);
}

TEST(Report, ClassifyResonantFlag) {
  const json j = json::parse(run_classify("resonant(k=[-3/10,0,1/2],a=[1,1,1])").json);
  EXPECT_EQ(j["classification"]["theorem_flags"]["resonant_M"], 3);
}

TEST(Report, ReconstructInfersM) {
  const auto r = run_reconstruct("resonant(k=[1,2,4],a=[1,2,3])");
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.json);
  EXPECT_EQ(j["M"], 3);
  EXPECT_EQ(j["k"], json({"1", "2", "4"}));
  EXPECT_EQ(run_reconstruct("two(-1,-1/2,1/2,1)", 3).exit_code, 1);
}

TEST(Report, GridEchoesDefaults) {
  GridOptions o;
  o.expr = "line(1,1,-1/2,1)";
  const json j = json::parse(run_grid(o).json);
  EXPECT_NEAR(j["field"]["max_u"].get<double>(), 1.125, 1e-9);
  EXPECT_EQ(j["invocation"]["grid"]["x"]["count"], 201);
  EXPECT_EQ(j["invocation"]["h"], 0.05);
}

TEST(Report, SweepParams) {
  const auto p = parse_sweep_param("k1=-1:1:1/2");
  EXPECT_EQ(p.name, "k1");
  EXPECT_EQ(p.values.size(), 5u);
  EXPECT_EQ(parse_sweep_param("a=1,2,7/2").values.back(), Rational(7, 2));
  EXPECT_THROW(parse_sweep_param("k1"), Error);

  SweepOptions s{"line(1,1,{k},1)", {parse_sweep_param("k=-2,1,0")}, {"kp_residual"}, {}};
  const json j = json::parse(run_sweep(s).json);
  EXPECT_EQ(j["counts"]["invalid"], 1);  // k = 1 is degenerate
  EXPECT_EQ(j["counts"]["failed"], 0);
}

TEST(Report, ByteDeterministic) {
  CheckOptions o;
  o.expr = "galilean(two(-3,-1,2,5),1/3)";
  EXPECT_EQ(run_check(o).json, run_check(o).json);
  EXPECT_EQ(run_classify(o.expr).json, run_classify(o.expr).json);
}
