#pragma once

// Constructors for concrete KP phases and the symmetry transforms acting on
// them. Every theta lives over VarSet::kp() = (t, x, y).

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "soliton/expalg.hpp"

namespace soliton {

enum class PhaseKind { Line, KdVVertical, Resonant, ResonantGeneral, TwoSoliton, Wronskian, Transformed, Raw };

std::string to_string(PhaseKind kind);
PhaseKind phase_kind_from_string(std::string_view name);

/// Declarative description of a constructed phase. `params` holds named
/// rational lists; the keys used per kind are
///
///   Line            a = {a1, a2}, k = {k1, k2}
///   KdVVertical     k = {k}
///   Resonant        a = {a_1..a_M}, k = {k_1..k_M}
///   ResonantGeneral a1, a2, k (each length M)
///   TwoSoliton      k = {k1..k4}; `unchecked` = {1} skips the ordering check
///   Wronskian       (none; inputs in `source`)
///   Transformed     beta = {b} or lambda = {l}, y_sign = {+-1}; input in `source`
///   Raw             (none; the polynomial itself is in `raw`)
struct PhaseSpec {
  PhaseKind kind = PhaseKind::Raw;
  std::map<std::string, std::vector<Rational>> params;
  std::vector<PhaseSpec> source;
  std::optional<ExpPoly> raw;

  friend bool operator==(const PhaseSpec&, const PhaseSpec&) = default;
};

struct Phase {
  PhaseSpec spec;
  ExpPoly theta;
};

/// Frequency vector over (t, x, y) of theta_k = k x + k^2 y + k^3 t.
std::vector<Rational> kp_frequency(const Rational& k);

/// a1 e^{theta_1} + a2 e^{theta_2}; requires a1, a2 > 0 and k1 != k2.
Phase line_soliton(const Rational& a1, const Rational& a2, const Rational& k1, const Rational& k2);

/// e^{kx + k^2 y + k^3 t} + e^{-kx + k^2 y - k^3 t}; requires k != 0.
Phase kdv_vertical(const Rational& k);

/// sum_i a_i e^{theta_i}; requires a_i > 0 and strictly increasing k.
Phase resonant(std::span<const Rational> a, std::span<const Rational> k);

/// sum_i (a1_i e^{-k_i x + k_i^2 y - k_i^3 t} + a2_i e^{theta_i}).
Phase resonant_general(std::span<const Rational> a1, std::span<const Rational> a2, std::span<const Rational> k);

/// Expanded 2-soliton, sum over (i,j) in {1,2}x{3,4} of (k_j - k_i) e^{theta_i + theta_j}.
/// Requires k1 < k2 < k3 < k4.
Phase two_soliton(const Rational& k1, const Rational& k2, const Rational& k3, const Rational& k4);

/// Same expansion without the ordering check (still rejects a zero theta).
Phase two_soliton_unchecked(const Rational& k1, const Rational& k2, const Rational& k3, const Rational& k4);

/// det [d_x^i theta_j], i, j = 0..n-1, by cofactor expansion. All inputs share
/// a VarSet containing "x". Throws ConstraintError on an empty list.
ExpPoly wronskian(std::span<const ExpPoly> thetas);

/// Wronskian of phases; rejects a zero result.
Phase wronskian_phase(std::span<const Phase> phases);

/// theta(t, x - 4b/3 y + 4b^2/3 t, y - 2b t).
Phase galilean(const Phase& phase, const Rational& beta);

/// theta(lambda^3 t, lambda x, y_sign lambda^2 y); requires lambda > 0.
Phase scale(const Phase& phase, const Rational& lambda, int y_sign);

/// Wraps an arbitrary non-zero polynomial over (t, x, y).
Phase raw_phase(ExpPoly theta);

/// Affine matrices (over t, x, y) of the two transforms.
RationalMatrix galilean_matrix(const Rational& beta);
RationalMatrix scale_matrix(const Rational& lambda, int y_sign);

/// Rebuilds a phase from its description, re-validating every constraint.
Phase build(const PhaseSpec& spec);

/// JSON text {kind, params, source[, theta]} with rationals as strings.
std::string to_json(const PhaseSpec& spec);
PhaseSpec phase_spec_from_json(std::string_view text);

}  // namespace soliton
