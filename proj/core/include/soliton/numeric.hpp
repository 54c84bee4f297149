#pragma once

// Floating-point sampling of u = 2 d_x^2 F(Theta), finite-difference PDE
// residuals, profile ODE checks and CSV export.
//
// For the 1+1 models (KdV, mKdV) the second grid axis is time: node (x, y)
// stands for (t0 + y, x).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "soliton/expalg.hpp"
#include "soliton/operators.hpp"

namespace soliton {

struct Range {
  double min = -10.0;
  double max = 10.0;
  int count = 201;

  double spacing() const { return (max - min) / (count - 1); }
  double at(int i) const { return min + spacing() * i; }
};

struct Grid {
  double t0 = 0.0;
  Range x;
  Range y;

  /// Throws ConstraintError unless counts >= 8 and ranges are non-degenerate.
  void validate() const;
};

struct FieldSample {
  Grid grid;
  /// Row-major: values[j * x.count + i] = u at (x_i, y_j).
  std::vector<double> values;
  std::string meta;
  std::size_t nonfinite = 0;

  double max() const;
};

/// u(t, x, y); 1+1 models ignore y.
using FieldFn = std::function<double(double t, double x, double y)>;

/// Pointwise u from exact derivatives of theta. KP and KdV use
/// u = 2 d_x^2 F(Theta); mKdV uses u = d_x F(Theta). Overflow is avoided by
/// evaluating every polynomial scaled by the largest exponent. With the log
/// profile a non-positive Theta raises RangeError.
FieldFn field_function(const ExpPoly& theta, Profile profile, Model model);

FieldSample eval_field(const ExpPoly& theta, Profile profile, const Grid& grid, Model model);
FieldSample sample_field(const FieldFn& u, const Grid& grid, Model model, std::string meta = {});

struct ResidualReport {
  Model model = Model::KP;
  double h = 0.0;
  double max_residual = 0.0;
  double max_residual_half = 0.0;
  /// log2(max_residual / max_residual_half).
  double order = 0.0;
  std::size_t nodes = 0;
  double tolerance = 0.0;
};

/// Calibrated C in the tolerance max(1e-6, C h^2). Only meaningful for
/// phases at the scale of the reference set; C grows steeply with |k|.
double residual_constant(Model model);
double default_tolerance(Model model, double h);

/// Second-order central-difference residual on every node whose stencil stays
/// inside the grid box, at steps h and h/2.
///
///   KP:   -4 u_tx + u_xxxx + 6 (u_x^2 + u u_xx) + 3 u_yy
///   KdV:  -4 u_t + u_xxx + 6 u u_x
///   mKdV: -4 u_t + u_xxx + 6 u^2 u_x
///
/// Throws ConstraintError when no node fits the stencil.
ResidualReport fd_residual(const FieldFn& u, Model model, const Grid& grid, double h);
ResidualReport fd_residual(const ExpPoly& theta, Profile profile, Model model, const Grid& grid, double h);

struct ProfileCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ProfileReport {
  Profile profile = Profile::Log;
  std::vector<ProfileCheck> checks;

  bool passed() const;
};

/// Exact rational checks of the profile ODE structure at the sample points
/// (all > 0). Empty `s` uses {1/2, 1, 2, 3, 10}.
ProfileReport profile_checks(Profile profile, const std::vector<Rational>& s = {});

/// Header `x,y,u`, one row per node in row-major order, shortest round-trip
/// decimal formatting.
std::string to_csv(const FieldSample& sample);
/// Throws IoError with the path on failure.
void export_csv(const FieldSample& sample, const std::string& path);

}  // namespace soliton
