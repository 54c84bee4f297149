#pragma once

// Closed-form fields used as oracles and for the phases that live outside the
// exponential-polynomial ring.

#include "soliton/numeric.hpp"

namespace soliton::closed {

/// 1/2 (k1 - k2)^2 sech^2(1/2 (theta_1 - theta_2 + log(a1 / a2))).
double line_soliton_u(double a1, double a2, double k1, double k2, double t, double x, double y);

/// 2 k^2 sech^2(k x + k^3 t).
double kdv_vertical_u(double k, double t, double x);

/// k sech(k x + k^3 t / 4).
double mkdv_soliton_u(double k, double t, double x);

/// Theta = (beta/alpha) sin(alpha (x + delta t)) / cosh(beta (x + gamma t)),
/// delta = (3 beta^2 - alpha^2) / 4, gamma = (beta^2 - 3 alpha^2) / 4.
struct Breather {
  double alpha = 1.0;
  double beta = 1.0;

  double theta(double t, double x) const;
  /// 2 Theta_x / (1 + Theta^2).
  double u(double t, double x) const;
  FieldFn field() const;
};

/// Theta = (e1 + e2) / (1 - rho^2 e1 e2), e_i = exp(sqrt(c_i) (x + c_i t / 4)),
/// rho = (sqrt(c1) - sqrt(c2)) / (sqrt(c1) + sqrt(c2)).
struct MkdvTwoSoliton {
  double c1 = 1.0;
  double c2 = 4.0;

  double u(double t, double x) const;
  FieldFn field() const;
};

}  // namespace soliton::closed
