#include "soliton/phases.hpp"

#include <algorithm>
#include "json.hpp"

#include "soliton/error.hpp"

namespace soliton {

namespace {

const Rational kZero(0);

void require_positive(std::span<const Rational> values, const char* what) {
  for (const auto& v : values) {
    if (sgn(v) <= 0) throw ConstraintError(std::string(what) + " must be positive, got " + to_string(v));
  }
}

void require_strictly_increasing(std::span<const Rational> k) {
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (!(k[i - 1] < k[i])) {
      throw ConstraintError("k must be strictly increasing (k_" + std::to_string(i) + " = " + to_string(k[i - 1]) +
                            ", k_" + std::to_string(i + 1) + " = " + to_string(k[i]) + ")");
    }
  }
}

std::vector<Rational> to_vector(std::span<const Rational> s) { return {s.begin(), s.end()}; }

ExpPoly kp_exponential(const Rational& a, const Rational& k) {
  return ExpPoly::exponential(VarSet::kp(), a, kp_frequency(k));
}

// theta_i + theta_j frequencies.
ExpPoly kp_pair(const Rational& c, const Rational& ki, const Rational& kj) {
  auto fi = kp_frequency(ki);
  auto fj = kp_frequency(kj);
  for (std::size_t n = 0; n < fi.size(); ++n) fi[n] += fj[n];
  return ExpPoly::exponential(VarSet::kp(), c, std::move(fi));
}

ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& m, std::vector<std::size_t>& rows, std::size_t col) {
  if (rows.size() == 1) return m[rows[0]][col];
  ExpPoly acc(m[0][0].vars());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t row = rows[r];
    if (m[row][col].is_zero()) continue;
    std::vector<std::size_t> minor_rows;
    minor_rows.reserve(rows.size() - 1);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q != r) minor_rows.push_back(rows[q]);
    }
    ExpPoly term = m[row][col] * determinant(m, minor_rows, col + 1);
    if (r % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

void require_kp(const ExpPoly& theta) {
  if (theta.vars() != VarSet::kp()) throw DimensionMismatch("phases live over (t, x, y)");
}

void require_nonzero(const ExpPoly& theta, const char* what) {
  if (theta.is_zero()) throw ConstraintError(std::string(what) + " produced a zero phase");
}

}  // namespace

std::string to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::Line:
      return "Line";
    case PhaseKind::KdVVertical:
      return "KdVVertical";
    case PhaseKind::Resonant:
      return "Resonant";
    case PhaseKind::ResonantGeneral:
      return "ResonantGeneral";
    case PhaseKind::TwoSoliton:
      return "TwoSoliton";
    case PhaseKind::Wronskian:
      return "Wronskian";
    case PhaseKind::Transformed:
      return "Transformed";
    case PhaseKind::Raw:
      return "Raw";
  }
  return "Raw";
}

PhaseKind phase_kind_from_string(std::string_view name) {
  for (auto k : {PhaseKind::Line, PhaseKind::KdVVertical, PhaseKind::Resonant, PhaseKind::ResonantGeneral,
                 PhaseKind::TwoSoliton, PhaseKind::Wronskian, PhaseKind::Transformed, PhaseKind::Raw}) {
    if (to_string(k) == name) return k;
  }
  throw ConstraintError("unknown phase kind '" + std::string(name) + "'");
}

std::vector<Rational> kp_frequency(const Rational& k) {
  Rational k2 = k * k;
  Rational k3 = k2 * k;
  return {k3, k, k2};
}

Phase line_soliton(const Rational& a1, const Rational& a2, const Rational& k1, const Rational& k2) {
  const Rational a[] = {a1, a2};
  require_positive(a, "line soliton amplitudes");
  if (k1 == k2) throw ConstraintError("line soliton requires k1 != k2");
  PhaseSpec spec{PhaseKind::Line, {{"a", {a1, a2}}, {"k", {k1, k2}}}, {}, std::nullopt};
  return {std::move(spec), kp_exponential(a1, k1) + kp_exponential(a2, k2)};
}

Phase kdv_vertical(const Rational& k) {
  if (sgn(k) == 0) throw ConstraintError("KdV vertical soliton requires k != 0");
  PhaseSpec spec{PhaseKind::KdVVertical, {{"k", {k}}}, {}, std::nullopt};
  return {std::move(spec), kp_exponential(Rational(1), k) + kp_exponential(Rational(1), Rational(-k))};
}

Phase resonant(std::span<const Rational> a, std::span<const Rational> k) {
  if (k.empty()) throw ConstraintError("resonant phase needs M >= 1");
  if (a.size() != k.size()) throw ConstraintError("resonant phase needs as many amplitudes as wave numbers");
  require_positive(a, "resonant amplitudes");
  require_strictly_increasing(k);
  ExpPoly theta(VarSet::kp());
  for (std::size_t i = 0; i < k.size(); ++i) theta += kp_exponential(a[i], k[i]);
  PhaseSpec spec{PhaseKind::Resonant, {{"a", to_vector(a)}, {"k", to_vector(k)}}, {}, std::nullopt};
  return {std::move(spec), std::move(theta)};
}

Phase resonant_general(std::span<const Rational> a1, std::span<const Rational> a2, std::span<const Rational> k) {
  if (k.empty()) throw ConstraintError("resonant phase needs M >= 1");
  if (a1.size() != k.size() || a2.size() != k.size()) {
    throw ConstraintError("resonant_general needs a1, a2 and k of equal length");
  }
  require_positive(a1, "resonant_general amplitudes a1");
  require_positive(a2, "resonant_general amplitudes a2");
  require_strictly_increasing(k);
  ExpPoly theta(VarSet::kp());
  for (std::size_t i = 0; i < k.size(); ++i) {
    theta += kp_exponential(a1[i], Rational(-k[i]));
    theta += kp_exponential(a2[i], k[i]);
  }
  PhaseSpec spec{PhaseKind::ResonantGeneral,
                 {{"a1", to_vector(a1)}, {"a2", to_vector(a2)}, {"k", to_vector(k)}},
                 {},
                 std::nullopt};
  return {std::move(spec), std::move(theta)};
}

Phase two_soliton_unchecked(const Rational& k1, const Rational& k2, const Rational& k3, const Rational& k4) {
  ExpPoly theta = kp_pair(k3 - k1, k1, k3) + kp_pair(k4 - k1, k1, k4) + kp_pair(k3 - k2, k2, k3) +
                  kp_pair(k4 - k2, k2, k4);
  require_nonzero(theta, "two_soliton");
  PhaseSpec spec{PhaseKind::TwoSoliton, {{"k", {k1, k2, k3, k4}}, {"unchecked", {Rational(1)}}}, {}, std::nullopt};
  return {std::move(spec), std::move(theta)};
}

Phase two_soliton(const Rational& k1, const Rational& k2, const Rational& k3, const Rational& k4) {
  const Rational k[] = {k1, k2, k3, k4};
  require_strictly_increasing(k);
  Phase p = two_soliton_unchecked(k1, k2, k3, k4);
  p.spec.params.erase("unchecked");
  return p;
}

ExpPoly wronskian(std::span<const ExpPoly> thetas) {
  if (thetas.empty()) throw ConstraintError("wronskian of an empty list");
  const VarSet& vars = thetas.front().vars();
  vars.require("x");
  const std::size_t n = thetas.size();
  std::vector<std::vector<ExpPoly>> m(n, std::vector<ExpPoly>(n, ExpPoly(vars)));
  for (std::size_t j = 0; j < n; ++j) {
    if (thetas[j].vars() != vars) throw VarSetMismatch("wronskian inputs have different variable sets");
    m[0][j] = thetas[j];
    for (std::size_t i = 1; i < n; ++i) m[i][j] = diff(m[i - 1][j], "x");
  }
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return determinant(m, rows, 0);
}

Phase wronskian_phase(std::span<const Phase> phases) {
  std::vector<ExpPoly> thetas;
  PhaseSpec spec{PhaseKind::Wronskian, {}, {}, std::nullopt};
  for (const auto& p : phases) {
    thetas.push_back(p.theta);
    spec.source.push_back(p.spec);
  }
  ExpPoly theta = wronskian(thetas);
  require_nonzero(theta, "wronskian");
  return {std::move(spec), std::move(theta)};
}

RationalMatrix galilean_matrix(const Rational& beta) {
  // Rows give the new (t, x, y) as linear forms in the old (t, x, y).
  const Rational four_thirds(4, 3);
  return {
      {Rational(1), kZero, kZero},
      {Rational(four_thirds * beta * beta), Rational(1), Rational(-four_thirds * beta)},
      {Rational(-2 * beta), kZero, Rational(1)},
  };
}

RationalMatrix scale_matrix(const Rational& lambda, int y_sign) {
  return {
      {Rational(lambda * lambda * lambda), kZero, kZero},
      {kZero, lambda, kZero},
      {kZero, kZero, Rational(y_sign * lambda * lambda)},
  };
}

Phase galilean(const Phase& phase, const Rational& beta) {
  require_kp(phase.theta);
  ExpPoly theta = substitute_affine(phase.theta, galilean_matrix(beta), std::vector<Rational>(3));
  PhaseSpec spec{PhaseKind::Transformed, {{"beta", {beta}}}, {phase.spec}, std::nullopt};
  return {std::move(spec), std::move(theta)};
}

Phase scale(const Phase& phase, const Rational& lambda, int y_sign) {
  require_kp(phase.theta);
  if (sgn(lambda) <= 0) throw ConstraintError("scale requires lambda > 0");
  if (y_sign != 1 && y_sign != -1) throw ConstraintError("scale requires y_sign = +1 or -1");
  ExpPoly theta = substitute_affine(phase.theta, scale_matrix(lambda, y_sign), std::vector<Rational>(3));
  PhaseSpec spec{PhaseKind::Transformed, {{"lambda", {lambda}}, {"y_sign", {Rational(y_sign)}}}, {phase.spec},
                 std::nullopt};
  return {std::move(spec), std::move(theta)};
}

Phase raw_phase(ExpPoly theta) {
  require_kp(theta);
  require_nonzero(theta, "raw");
  PhaseSpec spec{PhaseKind::Raw, {}, {}, theta};
  return {std::move(spec), std::move(theta)};
}

namespace {

const std::vector<Rational>& param(const PhaseSpec& spec, const std::string& key, std::size_t expected = 0) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw ConstraintError(to_string(spec.kind) + " spec is missing '" + key + "'");
  if (expected != 0 && it->second.size() != expected) {
    throw ConstraintError(to_string(spec.kind) + " spec '" + key + "' must have " + std::to_string(expected) +
                          " entries");
  }
  return it->second;
}

}  // namespace

Phase build(const PhaseSpec& spec) {
  switch (spec.kind) {
    case PhaseKind::Line: {
      const auto& a = param(spec, "a", 2);
      const auto& k = param(spec, "k", 2);
      return line_soliton(a[0], a[1], k[0], k[1]);
    }
    case PhaseKind::KdVVertical:
      return kdv_vertical(param(spec, "k", 1)[0]);
    case PhaseKind::Resonant:
      return resonant(param(spec, "a"), param(spec, "k"));
    case PhaseKind::ResonantGeneral:
      return resonant_general(param(spec, "a1"), param(spec, "a2"), param(spec, "k"));
    case PhaseKind::TwoSoliton: {
      const auto& k = param(spec, "k", 4);
      if (spec.params.contains("unchecked")) return two_soliton_unchecked(k[0], k[1], k[2], k[3]);
      return two_soliton(k[0], k[1], k[2], k[3]);
    }
    case PhaseKind::Wronskian: {
      std::vector<Phase> inputs;
      for (const auto& s : spec.source) inputs.push_back(build(s));
      return wronskian_phase(inputs);
    }
    case PhaseKind::Transformed: {
      if (spec.source.size() != 1) throw ConstraintError("Transformed spec needs exactly one source");
      Phase inner = build(spec.source.front());
      if (spec.params.contains("beta")) return galilean(inner, param(spec, "beta", 1)[0]);
      const auto& sign = param(spec, "y_sign", 1)[0];
      return scale(inner, param(spec, "lambda", 1)[0], sign > 0 ? 1 : -1);
    }
    case PhaseKind::Raw:
      if (!spec.raw) throw ConstraintError("Raw spec without a polynomial");
      return raw_phase(*spec.raw);
  }
  throw ConstraintError("unhandled phase kind");
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using json = nlohmann::ordered_json;

json term_to_json(const Term& t) {
  json freq = json::array();
  for (const auto& f : t.freq) freq.push_back(to_string(f));
  return json{{"coeff", to_string(t.coeff)}, {"mono", t.mono}, {"freq", freq}};
}

json spec_to_json(const PhaseSpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  json params = json::object();
  for (const auto& [key, values] : spec.params) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    params[key] = arr;
  }
  j["params"] = params;
  json source = json::array();
  for (const auto& s : spec.source) source.push_back(spec_to_json(s));
  j["source"] = source;
  if (spec.raw) {
    json terms = json::array();
    for (const auto& t : spec.raw->terms()) terms.push_back(term_to_json(t));
    j["theta"] = json{{"vars", spec.raw->vars().names()}, {"terms", terms}};
  }
  return j;
}

PhaseSpec spec_from_json(const json& j) {
  PhaseSpec spec;
  spec.kind = phase_kind_from_string(j.at("kind").get<std::string>());
  for (const auto& [key, values] : j.at("params").items()) {
    std::vector<Rational> v;
    for (const auto& s : values) v.push_back(parse_rational(s.get<std::string>()));
    spec.params[key] = std::move(v);
  }
  for (const auto& s : j.at("source")) spec.source.push_back(spec_from_json(s));
  if (j.contains("theta")) {
    const auto& th = j.at("theta");
    VarSet vars(th.at("vars").get<std::vector<std::string>>());
    std::vector<Term> terms;
    for (const auto& t : th.at("terms")) {
      Term term;
      term.coeff = parse_rational(t.at("coeff").get<std::string>());
      term.mono = t.at("mono").get<std::vector<unsigned>>();
      for (const auto& f : t.at("freq")) term.freq.push_back(parse_rational(f.get<std::string>()));
      terms.push_back(std::move(term));
    }
    spec.raw = ExpPoly(std::move(vars), std::move(terms));
  }
  return spec;
}

}  // namespace

std::string to_json(const PhaseSpec& spec) { return spec_to_json(spec).dump(); }

PhaseSpec phase_spec_from_json(std::string_view text) {
  try {
    return spec_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConstraintError(std::string("invalid phase JSON: ") + e.what());
  }
}

}  // namespace soliton
