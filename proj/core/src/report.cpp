#include "soliton/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "parallel.hpp"
#include "soliton/acceptance.hpp"
#include "soliton/cones.hpp"
#include "soliton/dsl.hpp"
#include "soliton/error.hpp"
#include "soliton/phases.hpp"

#ifndef SOLITON_FORGE_VERSION
#define SOLITON_FORGE_VERSION "0.0.0"
#endif

namespace soliton {

const char* version() { return SOLITON_FORGE_VERSION; }

namespace {

using json = nlohmann::ordered_json;

json header(const char* command) {
  json j;
  j["schema"] = kReportSchema;
  j["version"] = version();
  j["command"] = command;
  return j;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json opt(const std::optional<std::size_t>& v) { return v.has_value() ? json(*v) : json(nullptr); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Theta(t, x, 0) over (t, x).
ExpPoly project_y0(const ExpPoly& p) {
  const VarSet& from = p.vars();
  const std::size_t ti = from.require("t"), xi = from.require("x"), yi = from.require("y");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono[yi] != 0) continue;
    terms.push_back(Term{t.coeff, {t.mono[ti], t.mono[xi]}, {t.freq[ti], t.freq[xi]}});
  }
  return ExpPoly(VarSet::kdv(), std::move(terms));
}

json phase_json(const ResolvedPhase& p) {
  return json{{"expr", p.echo}, {"kind", p.kind}, {"vars", p.theta.vars().names()}, {"terms", p.theta.size()},
              {"theta", to_string(p.theta)}};
}

json decomposition_summary(const ConeDecomposition& d) {
  return json{{"var", d.var}, {"dim", d.size()}, {"strict_dim", opt(d.strict_dim())}, {"signed_dim", opt(d.signed_dim())}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

VarSet model_vars(Model model, int dimension) {
  switch (model) {
    case Model::KP:
      return VarSet::kp();
    case Model::KdV:
    case Model::mKdV:
      return VarSet::kdv();
    case Model::ZK:
    case Model::mZK:
      if (dimension < 2) throw DimensionMismatch("ZK models need d >= 2");
      return VarSet::zk(dimension);
  }
  return VarSet::kp();
}

ResolvedPhase resolve_phase(const std::string& text, Model model, int dimension) {
  const VarSet target = model_vars(model, dimension);
  std::optional<dsl::PhaseExpr> ast;
  try {
    ast = dsl::parse_syntax(text);
  } catch (const ParseError&) {
    if (text.find("exp(") == std::string::npos) throw;
    ExpPoly theta = dsl::parse_exppoly(text, target);
    if (theta.is_zero()) throw SemanticError("phase is identically zero");
    return ResolvedPhase{to_string(theta), "exppoly", std::move(theta)};
  }
  Phase phase = dsl::lower(*ast);
  ExpPoly theta = phase.theta;
  switch (model) {
    case Model::KP:
      break;
    case Model::KdV:
    case Model::mKdV:
      theta = project_y0(theta);
      break;
    case Model::ZK:
    case Model::mZK:
      theta = embed(rename(theta, VarSet({"t", "x1", "x2"})), target);
      break;
  }
  if (theta.is_zero()) throw SemanticError("phase vanishes on the model's variables");
  return ResolvedPhase{dsl::print(*ast), to_string(phase.spec.kind), std::move(theta)};
}

CommandResult run_check(const CheckOptions& o) {
  const ResolvedPhase phase = resolve_phase(o.expr, o.model, o.dimension);
  std::vector<std::string> ops = o.ops;
  if (ops.empty()) {
    if (o.model == Model::KP) {
      ops = {"heat", "airy", "wx", "wy", "T", "kp_residual"};
    } else {
      for (const auto& r : companion_ops(phase.theta, o.model, o.dimension)) ops.push_back(r.name);
    }
  }
  for (const auto* list : {&o.expect_zero, &o.expect_nonzero}) {
    for (const auto& name : *list) {
      if (!contains(ops, name)) ops.push_back(name);
    }
  }
  for (const auto& name : o.expect_zero) {
    if (contains(o.expect_nonzero, name)) throw ConstraintError("'" + name + "' expected both zero and non-zero");
  }

  json results = json::array();
  std::ostringstream summary;
  bool all = true;
  summary << "phase " << phase.echo << " (" << to_string(o.model) << ")\n";
  for (const auto& name : ops) {
    std::vector<OperatorResult> rs;
    const bool kp_op = contains({"heat", "airy", "wx", "wy", "T", "kp_residual"}, name);
    if (kp_op && o.model != Model::KP) throw ConstraintError("operator '" + name + "' needs --model kp");
    if (!kp_op && contains(operator_names(), name) == false) {
      // companion names such as zk_wx2 or mzk_ai resolve through companion_ops
      for (auto& r : companion_ops(phase.theta, o.model, o.dimension)) {
        if (r.name == name) rs.push_back(std::move(r));
      }
      if (rs.empty()) throw ConstraintError("unknown operator '" + name + "' for model " + to_string(o.model));
    } else {
      rs = apply_operator(name, phase.theta, o.dimension);
    }
    const char* expect = contains(o.expect_zero, name) ? "zero" : contains(o.expect_nonzero, name) ? "nonzero" : nullptr;
    for (const auto& r : rs) {
      const bool zero = r.is_zero();
      const bool passed = expect == nullptr || (std::string(expect) == "zero") == zero;
      all = all && passed;
      json j;
      j["name"] = r.name;
      j["model"] = to_string(r.model);
      j["zero"] = zero;
      j["terms"] = r.expr.size();
      j["cleared_by"] = r.cleared_by;
      j["clearing"] = r.clearing == ClearingFactor::Theta ? "theta" : "one_plus_theta_squared";
      if (r.expr.vars().contains("y")) j["cone_y"] = decomposition_summary(decompose(r.expr, "y"));
      j["expect"] = expect ? json(expect) : json(nullptr);
      j["passed"] = passed;
      j["expr"] = to_string(r.expr);
      results.push_back(std::move(j));
      summary << (passed ? "  ok   " : "  FAIL ") << r.name << ": " << (zero ? "zero" : "non-zero") << " ("
              << r.expr.size() << " terms)" << (expect ? std::string(", expected ") + expect : std::string()) << "\n";
    }
  }

  json j = header("check");
  j["invocation"] = json{{"expr", o.expr},         {"ops", ops},
                         {"model", to_string(o.model)}, {"dim", o.dimension},
                         {"expect_zero", o.expect_zero}, {"expect_nonzero", o.expect_nonzero}};
  j["phase"] = phase_json(phase);
  j["operators"] = results;
  j["passed"] = all;
  summary << (all ? "all checks passed" : "some checks failed") << "\n";
  return CommandResult{j.dump(), summary.str(), all ? 0 : 1};
}

CommandResult run_classify(const std::string& expr) {
  const ResolvedPhase phase = resolve_phase(expr);
  const ClassificationReport report = classify(phase.theta);
  json j = header("classify");
  j["invocation"] = json{{"expr", expr}};
  j["phase"] = phase_json(phase);
  j["classification"] = json::parse(to_json(report));
  j["wy_decomposition"] = json::parse(to_json(decompose(wy_cleared(phase.theta).expr, "y")));

  std::ostringstream s;
  const auto& f = report.theorem_flags;
  s << "phase " << phase.echo << "\n"
    << "  heat zero: " << yes(report.heat_zero) << ", airy zero: " << yes(report.airy_zero)
    << ", wx == wy: " << yes(report.wx_eq_wy) << "\n"
    << "  wy cone dim: " << (report.wy_cone_dim ? std::to_string(*report.wy_cone_dim) : "none") << "\n"
    << "  kdv_vertical: " << yes(f.kdv_vertical) << ", oblique_line: " << yes(f.oblique_line)
    << ", resonant_M: " << (f.resonant_M ? std::to_string(*f.resonant_M) : "none")
    << ", two_soliton: " << yes(f.two_soliton) << "\n";
  for (const auto& n : report.notes) s << "  note: " << n << "\n";
  return CommandResult{j.dump(), s.str(), 0};
}

CommandResult run_reconstruct(const std::string& expr, int m) {
  const ResolvedPhase phase = resolve_phase(expr);
  const ConeDecomposition d = decompose(wy_cleared(phase.theta).expr, "y");
  int used = m;
  if (used == 0) {
    for (int c = 2; c <= 16; ++c) {
      if (static_cast<std::size_t>(c * (c - 1) / 2) == d.size()) used = c;
    }
  }
  ReconstructionResult r = used >= 2 ? reconstruct_resonant(d, used)
                                     : ReconstructionResult{std::nullopt, "entry count " + std::to_string(d.size()) +
                                                                              " is not M(M-1)/2 for any M"};
  json j = header("reconstruct");
  j["invocation"] = json{{"expr", expr}, {"M", m == 0 ? json("auto") : json(m)}};
  j["phase"] = phase_json(phase);
  j["wy_decomposition"] = json::parse(to_json(d));
  j["M"] = used >= 2 ? json(used) : json(nullptr);
  j["ok"] = r.ok();
  j["diagnostic"] = r.diagnostic;
  std::ostringstream s;
  s << "phase " << phase.echo << "\n";
  if (r.ok()) {
    json k = json::array(), a = json::array();
    for (const auto& v : r.data->k) k.push_back(to_string(v));
    for (const auto& v : r.data->a) a.push_back(to_string(v));
    j["k"] = k;
    j["a"] = a;
    s << "  k = " << k.dump() << "\n  a = " << a.dump() << "\n";
  } else {
    j["k"] = nullptr;
    j["a"] = nullptr;
    s << "  reconstruction failed: " << r.diagnostic << "\n";
  }
  return CommandResult{j.dump(), s.str(), r.ok() ? 0 : 1};
}

CommandResult run_grid(const GridOptions& o) {
  if (o.model == Model::ZK || o.model == Model::mZK) throw ConstraintError("grid supports kp, kdv and mkdv");
  const ResolvedPhase phase = resolve_phase(o.expr, o.model);
  const FieldSample sample = eval_field(phase.theta, o.profile, o.grid, o.model);
  if (o.out) export_csv(sample, *o.out);

  double lo = std::numeric_limits<double>::infinity();
  for (double v : sample.values) {
    if (std::isfinite(v)) lo = std::min(lo, v);
  }
  json grid{{"t0", o.grid.t0},
            {"x", {{"min", o.grid.x.min}, {"max", o.grid.x.max}, {"count", o.grid.x.count}}},
            {"y", {{"min", o.grid.y.min}, {"max", o.grid.y.max}, {"count", o.grid.y.count}}}};
  json j = header("grid");
  j["invocation"] = json{{"expr", o.expr},
                         {"profile", to_string(o.profile)},
                         {"model", to_string(o.model)},
                         {"grid", grid},
                         {"out", o.out ? json(*o.out) : json(nullptr)},
                         {"residual", o.residual},
                         {"h", o.h},
                         {"tol", o.tol ? json(*o.tol) : json(nullptr)}};
  j["phase"] = phase_json(phase);
  j["field"] = json{{"max_u", num(sample.max())}, {"min_u", num(lo)}, {"nodes", sample.values.size()},
                    {"nonfinite", sample.nonfinite}};
  bool ok = sample.nonfinite == 0;
  std::ostringstream s;
  s << "phase " << phase.echo << " (" << to_string(o.model) << ", " << to_string(o.profile) << ")\n"
    << "  max u = " << sample.max() << ", min u = " << lo << ", non-finite = " << sample.nonfinite << "\n";
  if (o.out) s << "  wrote " << *o.out << "\n";
  if (o.residual) {
    const ResidualReport r = fd_residual(phase.theta, o.profile, o.model, o.grid, o.h);
    const double tol = o.tol.value_or(r.tolerance);
    const bool within = r.max_residual <= tol;
    ok = ok && within;
    j["residual"] = json{{"max_residual", num(r.max_residual)},
                         {"max_residual_half", num(r.max_residual_half)},
                         {"order", num(r.order)},
                         {"h", r.h},
                         {"nodes", r.nodes},
                         {"tolerance", tol},
                         {"within_tolerance", within},
                         {"grid", grid},
                         {"model", to_string(o.model)},
                         {"profile", to_string(o.profile)}};
    s << "  residual " << r.max_residual << " at h = " << r.h << ", order " << r.order << ", tol " << tol
      << (within ? " (ok)" : " (exceeded)") << "\n";
  } else {
    j["residual"] = nullptr;
  }
  j["passed"] = ok;
  return CommandResult{j.dump(), s.str(), ok ? 0 : 1};
}

SweepParam parse_sweep_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConstraintError("sweep parameter must look like name=values");
  SweepParam p{text.substr(0, eq), {}};
  const std::string body = text.substr(eq + 1);
  if (std::count(body.begin(), body.end(), ':') == 2) {
    const auto c1 = body.find(':'), c2 = body.rfind(':');
    const Rational start = parse_rational(body.substr(0, c1));
    const Rational stop = parse_rational(body.substr(c1 + 1, c2 - c1 - 1));
    const Rational step = parse_rational(body.substr(c2 + 1));
    if (step <= 0) throw ConstraintError("sweep step must be positive");
    for (Rational v = start; v <= stop; v += step) {
      p.values.push_back(v);
      if (p.values.size() > 4096) throw ConstraintError("sweep range too long");
    }
  } else {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      const std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      p.values.push_back(parse_rational(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (p.values.empty()) throw ConstraintError("sweep parameter '" + p.name + "' has no values");
  return p;
}

CommandResult run_sweep(const SweepOptions& o) {
  std::size_t total = 1;
  for (const auto& p : o.params) {
    total *= p.values.size();
    if (total > 4096) throw ConstraintError("sweep has more than 4096 points");
  }
  std::vector<std::string> exprs(total);
  std::vector<std::vector<std::pair<std::string, Rational>>> bindings(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::string text = o.templ;
    for (auto it = o.params.rbegin(); it != o.params.rend(); ++it) {
      const Rational& v = it->values[rest % it->values.size()];
      rest /= it->values.size();
      bindings[idx].insert(bindings[idx].begin(), {it->name, v});
      const std::string key = "{" + it->name + "}";
      for (auto pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos)) {
        text.replace(pos, key.size(), to_string(v));
      }
    }
    exprs[idx] = text;
  }

  std::vector<json> points(total);
  std::vector<int> status(total, 0);  // 0 ok, 1 failed, 2 invalid
  detail::parallel_rows(static_cast<int>(total), [&](int i) {
    json pt;
    json bind = json::object();
    for (const auto& [name, v] : bindings[i]) bind[name] = to_string(v);
    pt["params"] = bind;
    pt["expr"] = exprs[i];
    try {
      const ResolvedPhase phase = resolve_phase(exprs[i]);
      const ClassificationReport c = classify(phase.theta);
      pt["status"] = "ok";
      pt["kp_residual_zero"] = c.kp_residual_zero;
      pt["heat_zero"] = c.heat_zero;
      pt["airy_zero"] = c.airy_zero;
      pt["wy_cone_dim"] = opt(c.wy_cone_dim);
      pt["theorem_flags"] = json::parse(to_json(c))["theorem_flags"];
      bool passed = true;
      json checks = json::array();
      for (const auto* list : {&o.expect_zero, &o.expect_nonzero}) {
        const bool want_zero = list == &o.expect_zero;
        for (const auto& name : *list) {
          for (const auto& r : apply_operator(name, phase.theta)) {
            const bool ok = r.is_zero() == want_zero;
            passed = passed && ok;
            checks.push_back(json{{"name", r.name}, {"expect", want_zero ? "zero" : "nonzero"}, {"passed", ok}});
          }
        }
      }
      pt["checks"] = checks;
      pt["passed"] = passed;
      status[i] = passed ? 0 : 1;
    } catch (const SemanticError& e) {
      pt["status"] = "invalid";
      pt["error"] = e.what();
      status[i] = 2;
    }
    points[i] = std::move(pt);
  });

  json params = json::array();
  for (const auto& p : o.params) {
    json vs = json::array();
    for (const auto& v : p.values) vs.push_back(to_string(v));
    params.push_back(json{{"name", p.name}, {"values", vs}});
  }
  const auto failed = static_cast<std::size_t>(std::count(status.begin(), status.end(), 1));
  const auto invalid = static_cast<std::size_t>(std::count(status.begin(), status.end(), 2));
  json j = header("sweep");
  j["invocation"] = json{{"template", o.templ}, {"params", params}, {"expect_zero", o.expect_zero},
                         {"expect_nonzero", o.expect_nonzero}};
  j["points"] = points;
  j["counts"] = json{{"total", total}, {"failed", failed}, {"invalid", invalid}};
  j["passed"] = failed == 0;
  std::ostringstream s;
  s << "sweep " << o.templ << ": " << total << " points, " << failed << " failed, " << invalid << " invalid\n";
  return CommandResult{j.dump(), s.str(), failed == 0 ? 0 : 1};
}

CommandResult run_selftest(std::uint64_t seed) {
  const auto results = run_acceptance(seed);
  json criteria = json::array();
  std::ostringstream s;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    criteria.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    s << format_line(r) << "\n";
  }
  json j = header("selftest");
  j["invocation"] = json{{"seed", seed}};
  j["criteria"] = criteria;
  j["passed"] = all;
  s << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return CommandResult{j.dump(), s.str(), all ? 0 : 1};
}

}  // namespace soliton
