#include "soliton/operators.hpp"

#include "soliton/error.hpp"

namespace soliton {

namespace {

ExpPoly d(const ExpPoly& p, std::string_view var, unsigned order = 1) { return diff(p, var, order); }

void require_vars(const ExpPoly& theta, const VarSet& expected, Model model) {
  if (theta.vars() != expected) {
    throw DimensionMismatch("wrong variable set for model " + to_string(model));
  }
}

OperatorResult result(std::string name, ExpPoly expr, int cleared_by, Model model,
                      ClearingFactor clearing = ClearingFactor::Theta) {
  return OperatorResult{std::move(name), std::move(expr), cleared_by, clearing, model};
}

ExpPoly heat_expr(const ExpPoly& theta) { return d(theta, "y") - d(theta, "x", 2); }

ExpPoly airy_expr(const ExpPoly& theta) { return d(theta, "t") - d(theta, "x", 3); }

// -4 Theta_t + Theta_{xxx} in the 1D / ZK convention.
ExpPoly airy4_expr(const ExpPoly& theta, std::string_view x) {
  return Rational(-4) * d(theta, "t") + d(theta, x, 3);
}

// Theta_xx^2 - Theta_x Theta_xxx.
ExpPoly kdv_w_expr(const ExpPoly& theta, std::string_view x) {
  ExpPoly xx = d(theta, x, 2);
  return xx * xx - d(theta, x) * d(theta, x, 3);
}

ExpPoly log_wronskian(const ExpPoly& theta, std::string_view var, unsigned order) {
  ExpPoly lower = d(theta, var, order / 2);
  return theta * d(theta, var, order) - lower * lower;
}

}  // namespace

std::string to_string(Model model) {
  switch (model) {
    case Model::KP:
      return "KP";
    case Model::KdV:
      return "KdV";
    case Model::mKdV:
      return "mKdV";
    case Model::ZK:
      return "ZK";
    case Model::mZK:
      return "mZK";
  }
  return "KP";
}

Model model_from_string(std::string_view name) {
  for (auto m : {Model::KP, Model::KdV, Model::mKdV, Model::ZK, Model::mZK}) {
    std::string canonical = to_string(m);
    std::string lower;
    for (char c : canonical) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (name == canonical || name == lower) return m;
  }
  throw ConstraintError("unknown model '" + std::string(name) + "'");
}

std::string to_string(Profile profile) { return profile == Profile::Log ? "log" : "arctan2"; }

Profile profile_from_string(std::string_view name) {
  if (name == "log") return Profile::Log;
  if (name == "arctan2" || name == "arctan") return Profile::Arctan2;
  throw ConstraintError("unknown profile '" + std::string(name) + "'");
}

OperatorResult heat(const ExpPoly& theta) { return result("heat", heat_expr(theta), 0, Model::KP); }

OperatorResult airy(const ExpPoly& theta) { return result("airy", airy_expr(theta), 0, Model::KP); }

OperatorResult wx_cleared(const ExpPoly& theta) { return result("wx", log_wronskian(theta, "x", 4), 1, Model::KP); }

OperatorResult wy_cleared(const ExpPoly& theta) { return result("wy", log_wronskian(theta, "y", 2), 1, Model::KP); }

OperatorResult t_operator_cleared(const ExpPoly& theta) {
  const ExpPoly ai = airy_expr(theta);
  const ExpPoly h = heat_expr(theta);
  ExpPoly expr = Rational(4) * d(theta, "x") * ai - Rational(4) * theta * d(ai, "x") +
                 Rational(3) * theta * (d(h, "y") + d(h, "x", 2)) - Rational(3) * h * (d(theta, "y") + d(theta, "x", 2));
  return result("T", std::move(expr), 2, Model::KP);
}

OperatorResult kp_residual_cleared(const ExpPoly& theta) {
  const ExpPoly ai = airy_expr(theta);
  const ExpPoly xx = d(theta, "x", 2);
  const ExpPoly y = d(theta, "y");
  ExpPoly expr = Rational(4) * d(theta, "x") * ai - Rational(4) * theta * d(ai, "x") +
                 Rational(3) * theta * (d(theta, "y", 2) - d(theta, "x", 4)) + Rational(3) * (xx * xx - y * y);
  return result("kp_residual", std::move(expr), 2, Model::KP);
}

std::pair<ExpPoly, ExpPoly> wf_terms(const ExpPoly& theta, Profile profile) {
  if (profile != Profile::Log) {
    throw ConstraintError("generalized Wronskians are exact only for F = log");
  }
  return {log_wronskian(theta, "x", 4), log_wronskian(theta, "y", 2)};
}

std::vector<OperatorResult> companion_ops(const ExpPoly& theta, Model model, int dimension) {
  std::vector<OperatorResult> out;
  switch (model) {
    case Model::KP:
      out.push_back(heat(theta));
      out.push_back(airy(theta));
      out.push_back(wx_cleared(theta));
      out.push_back(wy_cleared(theta));
      out.push_back(t_operator_cleared(theta));
      out.push_back(kp_residual_cleared(theta));
      break;
    case Model::KdV: {
      require_vars(theta, VarSet::kdv(), model);
      ExpPoly ai = airy4_expr(theta, "x");
      ExpPoly w = kdv_w_expr(theta, "x");
      // Theta^2 (Ai_x + (3W - Theta_x Ai) / Theta)
      ExpPoly t = theta * theta * d(ai, "x") + theta * (Rational(3) * w - d(theta, "x") * ai);
      out.push_back(result("kdv_ai", ai, 0, model));
      out.push_back(result("kdv_w", w, 0, model));
      out.push_back(result("kdv_T", std::move(t), 2, model));
      break;
    }
    case Model::mKdV: {
      require_vars(theta, VarSet::kdv(), model);
      const ExpPoly x1 = d(theta, "x");
      ExpPoly res = (ExpPoly::constant(theta.vars(), Rational(1)) + theta * theta) *
                        (Rational(4) * d(theta, "t") - d(theta, "x", 3)) +
                    Rational(6) * x1 * (theta * d(theta, "x", 2) - x1 * x1);
      out.push_back(result("mkdv_res", std::move(res), 2, model, ClearingFactor::OnePlusThetaSquared));
      break;
    }
    case Model::ZK: {
      if (dimension < 2) throw DimensionMismatch("ZK requires d >= 2");
      require_vars(theta, VarSet::zk(dimension), model);
      out.push_back(result("zk_ai", airy4_expr(theta, "x1"), 0, model));
      out.push_back(result("zk_w1", kdv_w_expr(theta, "x1"), 0, model));
      for (int j = 2; j <= dimension; ++j) {
        const std::string xj = "x" + std::to_string(j);
        out.push_back(result("zk_wx" + std::to_string(j), log_wronskian(theta, xj, 2), 1, model));
      }
      break;
    }
    case Model::mZK: {
      if (dimension < 2) throw DimensionMismatch("mZK requires d >= 2");
      require_vars(theta, VarSet::zk(dimension), model);
      out.push_back(result("mzk_ai", airy4_expr(theta, "x1"), 0, model));
      out.push_back(result("mzk_w", kdv_w_expr(theta, "x1"), 0, model));
      const ExpPoly one_plus = ExpPoly::constant(theta.vars(), Rational(1)) + theta * theta;
      for (int j = 2; j <= dimension; ++j) {
        const std::string xj = "x" + std::to_string(j);
        const ExpPoly dj = d(theta, xj);
        // (1 + Theta^2)^2 (Theta_jj F'(Theta) + Theta_j^2 F''(Theta)) for F = 2 arctan
        ExpPoly lambda = Rational(2) * one_plus * d(theta, xj, 2) - Rational(4) * theta * dj * dj;
        out.push_back(result("mzk_lambda" + std::to_string(j), std::move(lambda), 2, model,
                             ClearingFactor::OnePlusThetaSquared));
      }
      break;
    }
  }
  return out;
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{"heat",     "airy",  "wx",    "wy",       "T",     "kp_residual",
                                              "kdv_ai",   "kdv_w", "kdv_T", "mkdv_res", "zk_ai", "zk_w1",
                                              "zk_wxj",   "mzk_lambda"};
  return names;
}

std::vector<OperatorResult> apply_operator(std::string_view name, const ExpPoly& theta, int dimension) {
  if (name == "heat") return {heat(theta)};
  if (name == "airy") return {airy(theta)};
  if (name == "wx") return {wx_cleared(theta)};
  if (name == "wy") return {wy_cleared(theta)};
  if (name == "T") return {t_operator_cleared(theta)};
  if (name == "kp_residual") return {kp_residual_cleared(theta)};

  auto pick = [&](Model model, std::string_view prefix, bool exact) {
    std::vector<OperatorResult> picked;
    for (auto& r : companion_ops(theta, model, dimension)) {
      if (exact ? r.name == prefix : r.name.starts_with(prefix)) picked.push_back(std::move(r));
    }
    return picked;
  };
  if (name == "kdv_ai" || name == "kdv_w" || name == "kdv_T") return pick(Model::KdV, name, true);
  if (name == "mkdv_res") return pick(Model::mKdV, name, true);
  if (name == "zk_ai" || name == "zk_w1") return pick(Model::ZK, name, true);
  if (name == "zk_wxj") return pick(Model::ZK, "zk_wx", false);
  if (name == "mzk_lambda") return pick(Model::mZK, "mzk_lambda", false);
  throw ConstraintError("unknown operator '" + std::string(name) + "'");
}

}  // namespace soliton
