#include "soliton/closed_forms.hpp"

#include <cmath>

namespace soliton::closed {

namespace {

double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace

double line_soliton_u(double a1, double a2, double k1, double k2, double t, double x, double y) {
  const double th1 = k1 * x + k1 * k1 * y + k1 * k1 * k1 * t;
  const double th2 = k2 * x + k2 * k2 * y + k2 * k2 * k2 * t;
  const double s = sech(0.5 * (th1 - th2 + std::log(a1 / a2)));
  return 0.5 * (k1 - k2) * (k1 - k2) * s * s;
}

double kdv_vertical_u(double k, double t, double x) {
  const double s = sech(k * x + k * k * k * t);
  return 2.0 * k * k * s * s;
}

double mkdv_soliton_u(double k, double t, double x) { return k * sech(k * x + k * k * k * t / 4.0); }

double Breather::theta(double t, double x) const {
  const double delta = (3 * beta * beta - alpha * alpha) / 4;
  const double gamma = (beta * beta - 3 * alpha * alpha) / 4;
  return beta / alpha * std::sin(alpha * (x + delta * t)) / std::cosh(beta * (x + gamma * t));
}

double Breather::u(double t, double x) const {
  const double delta = (3 * beta * beta - alpha * alpha) / 4;
  const double gamma = (beta * beta - 3 * alpha * alpha) / 4;
  const double a = alpha * (x + delta * t);
  const double b = beta * (x + gamma * t);
  const double th = beta / alpha * std::sin(a) / std::cosh(b);
  const double thx = (beta * std::cos(a) - beta * beta / alpha * std::sin(a) * std::tanh(b)) / std::cosh(b);
  return 2 * thx / (1 + th * th);
}

FieldFn Breather::field() const {
  return [b = *this](double t, double x, double) { return b.u(t, x); };
}

double MkdvTwoSoliton::u(double t, double x) const {
  const double r1 = std::sqrt(c1), r2 = std::sqrt(c2);
  const double rho = (r1 - r2) / (r1 + r2);
  const double e1 = std::exp(r1 * (x + c1 * t / 4));
  const double e2 = std::exp(r2 * (x + c2 * t / 4));
  const double n = e1 + e2;
  const double d = 1 - rho * rho * e1 * e2;
  const double nx = r1 * e1 + r2 * e2;
  const double dx = -rho * rho * (r1 + r2) * e1 * e2;
  return 2 * (nx * d - n * dx) / (d * d + n * n);
}

FieldFn MkdvTwoSoliton::field() const {
  return [s = *this](double t, double x, double) { return s.u(t, x); };
}

}  // namespace soliton::closed
