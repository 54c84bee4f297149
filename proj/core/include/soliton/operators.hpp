#pragma once

// Differential functionals on phases, in exact cleared-polynomial form.
//
// Every functional that carries 1/Theta or 1/Theta^2 is returned multiplied
// by the power of Theta (or of 1 + Theta^2 for the arctan profile) that clears
// it. Zero-testing the cleared form is equivalent to the original condition
// wherever Theta > 0.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soliton/expalg.hpp"

namespace soliton {

enum class Model { KP, KdV, mKdV, ZK, mZK };

enum class Profile { Log, Arctan2 };

/// Which factor was used to clear denominators.
enum class ClearingFactor { Theta, OnePlusThetaSquared };

std::string to_string(Model model);
Model model_from_string(std::string_view name);
std::string to_string(Profile profile);
Profile profile_from_string(std::string_view name);

struct OperatorResult {
  std::string name;
  ExpPoly expr;
  /// Power of the clearing factor the functional was multiplied by.
  int cleared_by = 0;
  ClearingFactor clearing = ClearingFactor::Theta;
  Model model = Model::KP;

  bool is_zero() const { return expr.is_zero(); }
};

// KP conventions (theta over t, x, y).

/// H = Theta_y - Theta_xx.
OperatorResult heat(const ExpPoly& theta);
/// Ai = Theta_t - Theta_xxx.
OperatorResult airy(const ExpPoly& theta);
/// Theta Theta_xxxx - Theta_xx^2.
OperatorResult wx_cleared(const ExpPoly& theta);
/// Theta Theta_yy - Theta_y^2.
OperatorResult wy_cleared(const ExpPoly& theta);
/// Theta^2 T(Theta) for F = log:
/// 4 Theta_x Ai - 4 Theta Ai_x + 3 Theta (H_y + H_xx) - 3 H (Theta_y + Theta_xx).
OperatorResult t_operator_cleared(const ExpPoly& theta);
/// Theta^2 times the KP master equation with F = log:
/// 4 Theta_x Ai - 4 Theta Ai_x + 3 Theta (Theta_yy - Theta_xxxx) + 3 (Theta_xx^2 - Theta_y^2).
/// This equals half the Hirota bilinear KP form.
OperatorResult kp_residual_cleared(const ExpPoly& theta);

/// (Theta W^F_x, Theta W^F_y) for F = log. Other profiles throw ConstraintError;
/// they are handled numerically.
std::pair<ExpPoly, ExpPoly> wf_terms(const ExpPoly& theta, Profile profile);

/// Cleared companion-model functionals, keyed by operator name:
///
///   KdV  (t, x):        kdv_ai, kdv_w, kdv_T
///   mKdV (t, x):        mkdv_res
///   ZK   (t, x1..xd):   zk_ai, zk_w1, zk_wx2 .. zk_wxd
///   mZK  (t, x1..xd):   mzk_ai, mzk_w, mzk_lambda2 .. mzk_lambdad
///
/// Throws DimensionMismatch when theta's variables do not match the model.
std::vector<OperatorResult> companion_ops(const ExpPoly& theta, Model model, int dimension = 2);

/// Names accepted by apply_operator.
const std::vector<std::string>& operator_names();

/// Dispatches by CLI name (heat, airy, wx, wy, T, kp_residual, kdv_ai,
/// kdv_w, kdv_T, mkdv_res, zk_ai, zk_w1, zk_wxj, mzk_lambda). The ZK and mZK
/// per-direction operators expand to one result per j = 2..d.
std::vector<OperatorResult> apply_operator(std::string_view name, const ExpPoly& theta, int dimension = 2);

}  // namespace soliton
