#pragma once

// Cone analysis of operator outputs, classification of phases and
// reconstruction of resonant parameters from Theta W_y(Theta).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soliton/expalg.hpp"

namespace soliton {

struct ConeEntry {
  Rational freq;
  /// Coefficient over the remaining variables.
  ExpPoly coeff;
  unsigned poly_degree = 0;
};

struct ConeFlags {
  bool all_freq_nonneg = true;
  bool all_coeff_syntactically_positive = true;
  bool no_poly_prefactor = true;
};

struct ConeDecomposition {
  std::string var;
  std::vector<ConeEntry> entries;
  ConeFlags flags;

  std::size_t size() const noexcept { return entries.size(); }
  /// Entry count when every strict-mode flag holds.
  std::optional<std::size_t> strict_dim() const;
  /// Entry count when there are no polynomial prefactors in `var`.
  std::optional<std::size_t> signed_dim() const;
  /// Membership in W_n.
  bool in_cone(std::size_t n, bool strict = true) const;
};

ConeDecomposition decompose(const ExpPoly& p, std::string_view var = "y");

struct TheoremFlags {
  bool kdv_vertical = false;
  bool oblique_line = false;
  /// Set when Theta is Airy and Heat and Theta W_y lies in some strict cone.
  std::optional<int> resonant_M;
  bool two_soliton = false;
};

struct ClassificationReport {
  bool heat_zero = false;
  bool airy_zero = false;
  bool wx_eq_wy = false;
  bool kp_residual_zero = false;
  bool t_zero = false;
  bool trivial_kernel = false;
  /// Ai == (3/2) d_x H.
  bool airy_heat_identity = false;
  std::optional<std::size_t> wy_cone_dim;
  std::optional<std::size_t> wx_cone_dim;
  std::optional<std::size_t> heat_strict_dim;
  std::optional<std::size_t> heat_signed_dim;
  std::optional<std::size_t> airy_strict_dim;
  std::optional<std::size_t> airy_signed_dim;
  TheoremFlags theorem_flags;
  std::vector<std::string> notes;
};

/// Theta must be over (t, x, y).
ClassificationReport classify(const ExpPoly& theta);

std::string to_json(const ClassificationReport& report);
/// {var, dim, strict_dim, signed_dim, flags, entries[{freq, coeff, poly_degree}]}.
std::string to_json(const ConeDecomposition& decomp);

struct ResonantData {
  std::vector<Rational> k;
  std::vector<Rational> a;

  friend bool operator==(const ResonantData&, const ResonantData&) = default;
};

struct ReconstructionResult {
  std::optional<ResonantData> data;
  std::string diagnostic;

  bool ok() const noexcept { return data.has_value(); }
};

/// Inverts decompose(wy_cleared(resonant(a, k)), "y") for M >= 2. The k_i^2
/// come from a turnpike search over the y-frequencies, the signs from each
/// entry's x-frequency, and a_i from a_i a_j (k_i^2 - k_j^2)^2 = b_ij. For
/// M = 2 the gauge a_1 = 1 is used.
ReconstructionResult reconstruct_resonant(const ConeDecomposition& decomp, int m);

}  // namespace soliton
