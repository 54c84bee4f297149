#include "soliton/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "soliton/error.hpp"
#include "soliton/operators.hpp"
#include "soliton/phases.hpp"

namespace soliton {

std::optional<std::size_t> ConeDecomposition::strict_dim() const {
  if (flags.all_freq_nonneg && flags.all_coeff_syntactically_positive && flags.no_poly_prefactor) {
    return entries.size();
  }
  return std::nullopt;
}

std::optional<std::size_t> ConeDecomposition::signed_dim() const {
  if (flags.no_poly_prefactor) return entries.size();
  return std::nullopt;
}

bool ConeDecomposition::in_cone(std::size_t n, bool strict) const {
  auto dim = strict ? strict_dim() : signed_dim();
  return dim.has_value() && *dim <= n;
}

ConeDecomposition decompose(const ExpPoly& p, std::string_view var) {
  ConeDecomposition out;
  out.var = std::string(var);
  for (auto& group : group_by_frequency(p, var)) {
    if (group.freq < 0) out.flags.all_freq_nonneg = false;
    if (group.poly_degree > 0) out.flags.no_poly_prefactor = false;
    for (const auto& t : group.coeff.terms()) {
      if (t.coeff <= 0) out.flags.all_coeff_syntactically_positive = false;
    }
    out.entries.push_back(ConeEntry{group.freq, std::move(group.coeff), group.poly_degree});
  }
  // monomial prefactors in `var` are also caught term-wise
  const std::size_t vi = p.vars().require(var);
  for (const auto& t : p.terms()) {
    if (t.mono[vi] > 0) out.flags.no_poly_prefactor = false;
  }
  return out;
}

namespace {

bool single_x_free_exponential(const ExpPoly& theta) {
  if (theta.size() != 1) return false;
  return theta.terms()[0].mono[theta.vars().require("x")] == 0;
}

}  // namespace

ClassificationReport classify(const ExpPoly& theta) {
  if (theta.vars() != VarSet::kp()) throw VarSetMismatch("classify expects a phase over (t, x, y)");
  ClassificationReport r;
  const ExpPoly h = heat(theta).expr;
  const ExpPoly ai = airy(theta).expr;
  const ExpPoly wx = wx_cleared(theta).expr;
  const ExpPoly wy = wy_cleared(theta).expr;

  r.heat_zero = h.is_zero();
  r.airy_zero = ai.is_zero();
  r.wx_eq_wy = wx == wy;
  r.kp_residual_zero = kp_residual_cleared(theta).is_zero();
  r.t_zero = t_operator_cleared(theta).is_zero();
  r.trivial_kernel = single_x_free_exponential(theta);
  r.airy_heat_identity = (ai - Rational(3, 2) * diff(h, "x")).is_zero();

  const auto dwy = decompose(wy);
  const auto dwx = decompose(wx);
  const auto dh = decompose(h);
  const auto dai = decompose(ai);
  r.wy_cone_dim = dwy.strict_dim();
  r.wx_cone_dim = dwx.strict_dim();
  r.heat_strict_dim = dh.strict_dim();
  r.heat_signed_dim = dh.signed_dim();
  r.airy_strict_dim = dai.strict_dim();
  r.airy_signed_dim = dai.signed_dim();

  auto& f = r.theorem_flags;
  const bool airy_heat = r.heat_zero && r.airy_zero;
  f.kdv_vertical = airy_heat && wy.is_zero() && !r.trivial_kernel;
  f.oblique_line = airy_heat && r.wx_eq_wy && r.wy_cone_dim.has_value() && *r.wy_cone_dim <= 1 && !r.trivial_kernel;
  if (airy_heat && r.wy_cone_dim.has_value()) {
    if (r.trivial_kernel) {
      f.resonant_M = 1;
    } else {
      int m = 2;
      while (static_cast<std::size_t>(m * (m - 1) / 2) < *r.wy_cone_dim) ++m;
      f.resonant_M = m;
    }
  }
  auto le = [](const std::optional<std::size_t>& d, std::size_t n) { return d.has_value() && *d <= n; };
  f.two_soliton = !r.heat_zero && !r.airy_zero && le(r.heat_signed_dim, 4) && le(r.airy_signed_dim, 4) &&
                  le(r.wy_cone_dim, 5) && le(r.wx_cone_dim, 5) && r.airy_heat_identity;

  if (r.trivial_kernel) r.notes.emplace_back("single exponential without x-power: u = 0 (kernel phase)");
  if (f.two_soliton && !(le(r.heat_strict_dim, 4) && le(r.airy_strict_dim, 4))) {
    r.notes.emplace_back("H and Ai lie in W_4 in signed mode only");
  }
  if (!r.wy_cone_dim.has_value()) r.notes.emplace_back("Theta W_y is not in any strict cone");
  if (r.kp_residual_zero && !airy_heat && !f.two_soliton) {
    r.notes.emplace_back("KP solution outside the Airy/Heat and 2-soliton classes");
  }
  return r;
}

namespace {

using json = nlohmann::ordered_json;

json opt(const std::optional<std::size_t>& v) { return v.has_value() ? json(*v) : json(nullptr); }

}  // namespace

std::string to_json(const ClassificationReport& r) {
  json j;
  j["heat_zero"] = r.heat_zero;
  j["airy_zero"] = r.airy_zero;
  j["wx_eq_wy"] = r.wx_eq_wy;
  j["kp_residual_zero"] = r.kp_residual_zero;
  j["t_zero"] = r.t_zero;
  j["trivial_kernel"] = r.trivial_kernel;
  j["airy_heat_identity"] = r.airy_heat_identity;
  j["wy_cone_dim"] = opt(r.wy_cone_dim);
  j["wx_cone_dim"] = opt(r.wx_cone_dim);
  j["heat_dim"] = json{{"strict", opt(r.heat_strict_dim)}, {"signed", opt(r.heat_signed_dim)}};
  j["airy_dim"] = json{{"strict", opt(r.airy_strict_dim)}, {"signed", opt(r.airy_signed_dim)}};
  const auto& f = r.theorem_flags;
  j["theorem_flags"] = json{{"kdv_vertical", f.kdv_vertical},
                            {"oblique_line", f.oblique_line},
                            {"resonant", f.resonant_M.has_value()},
                            {"resonant_M", f.resonant_M.has_value() ? json(*f.resonant_M) : json(nullptr)},
                            {"two_soliton", f.two_soliton}};
  j["notes"] = r.notes;
  return j.dump();
}

std::string to_json(const ConeDecomposition& d) {
  json entries = json::array();
  for (const auto& e : d.entries) {
    entries.push_back(json{{"freq", to_string(e.freq)}, {"coeff", to_string(e.coeff)}, {"poly_degree", e.poly_degree}});
  }
  json j;
  j["var"] = d.var;
  j["dim"] = d.size();
  j["strict_dim"] = opt(d.strict_dim());
  j["signed_dim"] = opt(d.signed_dim());
  j["flags"] = json{{"all_freq_nonneg", d.flags.all_freq_nonneg},
                    {"all_coeff_syntactically_positive", d.flags.all_coeff_syntactically_positive},
                    {"no_poly_prefactor", d.flags.no_poly_prefactor}};
  j["entries"] = entries;
  return j.dump();
}

// ---------------------------------------------------------------------------
// reconstruction

namespace {

struct Sample {
  Rational m;   // y-frequency k_i^2 + k_j^2
  Rational s;   // x-frequency k_i + k_j
  Rational c3;  // t-frequency k_i^3 + k_j^3
  Rational b;
};

ReconstructionResult fail(std::string why) { return ReconstructionResult{std::nullopt, std::move(why)}; }

// All multisets q_1 <= ... <= q_M whose pairwise sums are exactly `sums`.
std::vector<std::vector<Rational>> turnpike(std::vector<Rational> sums, int m) {
  std::sort(sums.begin(), sums.end());
  std::vector<std::vector<Rational>> found;
  for (std::size_t c = 2; c < sums.size(); ++c) {
    const Rational q1 = (sums[0] + sums[1] - sums[c]) / 2;
    std::multiset<Rational> rest(sums.begin(), sums.end());
    std::vector<Rational> q{q1};
    bool ok = true;
    while (ok && static_cast<int>(q.size()) < m) {
      if (rest.empty()) {
        ok = false;
        break;
      }
      const Rational next = *rest.begin() - q1;
      for (const auto& e : q) {
        auto it = rest.find(next + e);
        if (it == rest.end()) {
          ok = false;
          break;
        }
        rest.erase(it);
      }
      q.push_back(next);
    }
    if (ok && rest.empty() && std::find(found.begin(), found.end(), q) == found.end()) found.push_back(q);
  }
  return found;
}

// Signed k_i from k_i^2, matched against each sample's x and t frequencies.
std::vector<std::vector<Rational>> assign_signs(const std::vector<Rational>& q, const std::vector<Sample>& samples) {
  std::vector<Rational> root;
  for (const auto& v : q) {
    auto r = exact_sqrt(v);
    if (!r) return {};
    root.push_back(*r);
  }
  const std::size_t m = q.size();
  std::vector<std::vector<Rational>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Rational> k(m);
    for (std::size_t i = 0; i < m; ++i) k[i] = (mask >> i & 1u) ? Rational(-root[i]) : root[i];
    std::vector<Rational> sorted = k;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    if (std::find(out.begin(), out.end(), sorted) != out.end()) continue;
    bool ok = true;
    for (const auto& smp : samples) {
      bool hit = false;
      for (std::size_t i = 0; i < m && !hit; ++i) {
        for (std::size_t j = i + 1; j < m && !hit; ++j) {
          hit = k[i] * k[i] + k[j] * k[j] == smp.m && k[i] + k[j] == smp.s &&
                k[i] * k[i] * k[i] + k[j] * k[j] * k[j] == smp.c3;
        }
      }
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(sorted);
  }
  return out;
}

std::optional<std::vector<Rational>> solve_amplitudes(const std::vector<Rational>& k, const std::vector<Sample>& samples) {
  const std::size_t m = k.size();
  std::map<std::pair<std::size_t, std::size_t>, Rational> c;
  for (const auto& smp : samples) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (k[i] + k[j] == smp.s && k[i] * k[i] + k[j] * k[j] == smp.m) {
          const Rational gap = k[i] * k[i] - k[j] * k[j];
          c[{i, j}] = smp.b / (gap * gap);
        }
      }
    }
  }
  if (c.size() != m * (m - 1) / 2) return std::nullopt;
  for (const auto& [_, v] : c) {
    if (v <= 0) return std::nullopt;
  }
  auto at = [&](std::size_t i, std::size_t j) { return i < j ? c.at({i, j}) : c.at({j, i}); };
  std::vector<Rational> a(m);
  if (m == 2) {
    a = {Rational(1), at(0, 1)};
    return a;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const std::size_t l = (i + 2) % m;
    auto r = exact_sqrt(at(i, j) * at(i, l) / at(j, l));
    if (!r) return std::nullopt;
    a[i] = *r;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a[i] * a[j] != at(i, j)) return std::nullopt;
    }
  }
  return a;
}

bool same_entries(const ConeDecomposition& x, const ConeDecomposition& y) {
  if (x.entries.size() != y.entries.size()) return false;
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    if (x.entries[i].freq != y.entries[i].freq || x.entries[i].coeff != y.entries[i].coeff) return false;
  }
  return true;
}

}  // namespace

ReconstructionResult reconstruct_resonant(const ConeDecomposition& decomp, int m) {
  if (m < 2) return fail("M must be at least 2");
  const std::size_t expected = static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
  if (decomp.entries.size() != expected) {
    return fail("decomposition has " + std::to_string(decomp.entries.size()) + " entries; M = " + std::to_string(m) +
                " needs " + std::to_string(expected));
  }
  if (!decomp.flags.no_poly_prefactor) return fail("polynomial prefactor in " + decomp.var);

  std::vector<Sample> samples;
  for (const auto& e : decomp.entries) {
    if (e.coeff.size() != 1) return fail("coefficient at frequency " + to_string(e.freq) + " is not a single term");
    const Term& t = e.coeff.terms()[0];
    if (std::any_of(t.mono.begin(), t.mono.end(), [](unsigned v) { return v != 0; })) {
      return fail("coefficient at frequency " + to_string(e.freq) + " carries a polynomial factor");
    }
    const auto xi = e.coeff.vars().index_of("x");
    const auto ti = e.coeff.vars().index_of("t");
    if (!xi || !ti) return fail("coefficients must be over (t, x)");
    if (t.coeff <= 0) return fail("coefficient at frequency " + to_string(e.freq) + " is not positive");
    samples.push_back(Sample{e.freq, t.freq[*xi], t.freq[*ti], t.coeff});
  }

  std::vector<std::vector<Rational>> squares;
  if (m == 2) {
    // one entry: k1 + k2 and k1^2 + k2^2 fix the pair
    const Rational diff2 = 2 * samples[0].m - samples[0].s * samples[0].s;
    auto d = exact_sqrt(diff2);
    if (!d) return fail("k_2 - k_1 is irrational");
    const Rational k1 = (samples[0].s - *d) / 2;
    const Rational k2 = (samples[0].s + *d) / 2;
    squares.push_back({k1 * k1, k2 * k2});
  } else {
    squares = turnpike([&] {
      std::vector<Rational> sums;
      for (const auto& s : samples) sums.push_back(s.m);
      return sums;
    }(), m);
    if (squares.empty()) return fail("y-frequencies are not the pairwise sums of " + std::to_string(m) + " values");
  }

  bool any_signed = false;
  for (const auto& q : squares) {
    for (const auto& k : assign_signs(q, samples)) {
      any_signed = true;
      auto a = solve_amplitudes(k, samples);
      if (!a) continue;
      Phase phase = resonant(*a, k);
      if (!same_entries(decompose(wy_cleared(phase.theta).expr, decomp.var), decomp)) continue;
      return ReconstructionResult{ResonantData{k, *a}, "ok"};
    }
  }
  if (!any_signed) return fail("no sign assignment of the k_i matches the x- and t-frequencies");
  return fail("amplitude system a_i a_j (k_i^2 - k_j^2)^2 = b_ij has no positive rational solution");
}

}  // namespace soliton
