#include "bgk/representations.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bgk/error.hpp"

namespace bgk {

namespace {

using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;

QuadratureConfig outer_config(const Factorizer& f) { return f.config().relaxed(100.0); }

double kappa0(const Factorizer& f) { return f.regime() == Regime::IndexZero ? 1.0 : 0.0; }

// sinh Theta / X on the cut, from a single principal-value evaluation.
Complex sinh_over_x(double t, const Factorizer& f) {
  if (t <= 0.0) return 0.0;
  const Complex half = f.theta_value(t);
  return std::sinh(half) / f.x_on_cut(t);
}

Complex weighted_density(double t, const Factorizer& f) {
  if (t <= 0.0) return 0.0;
  return half_jump(t) * f.x_boundary(t).plus / lambda_boundary(t, f.params()).plus;
}

double relative(Complex lhs, Complex rhs, Complex scale) {
  return std::abs(lhs - rhs) / std::abs(scale);
}

}  // namespace

double jump_representation_residual(Complex z, const Factorizer& f) {
  const Complex x = f.x_of_z(z);
  const Complex integral = integrate_semi_infinite(
      [&](double u) {
        if (u <= 0.0) return Complex(0.0);
        return f.x_boundary(u).jump() / (u - z);
      },
      outer_config(f));
  return relative(x, kappa0(f) + integral / (2.0 * kPi * 1i), x);
}

double weighted_jump_representation_residual(Complex z, const Factorizer& f) {
  const Complex x = f.x_of_z(z);
  const Complex integral = integrate_semi_infinite(
      [&](double u) { return weighted_density(u, f) / (u - z); }, outer_config(f));
  return relative(x, kappa0(f) + integral / kPi, x);
}

Complex normalization_integral(const Factorizer& f) {
  return integrate_semi_infinite([&](double u) { return weighted_density(u, f); },
                                 outer_config(f)) /
         kPi;
}

double reciprocal_representation_residual(Complex z, const Factorizer& f) {
  const Complex inv = 1.0 / f.x_of_z(z);
  const Complex integral = integrate_semi_infinite(
      [&](double t) { return sinh_over_x(t, f) / (t - z); }, outer_config(f));
  const Complex rhs = -integral / (kPi * 1i);
  if (f.regime() == Regime::IndexOne) return relative(inv - z + f.v1_constant(), rhs, inv);
  return relative(inv, 1.0 + rhs, inv);
}

double reciprocal_on_cut_residual(double mu, const Factorizer& f) {
  const Complex lhs = std::cosh(f.theta_value(mu)) / f.x_on_cut(mu);
  const Complex pv =
      cauchy_pv([&](double t) { return sinh_over_x(t, f); }, mu, outer_config(f));
  const Complex rhs = -pv / (kPi * 1i);
  if (f.regime() == Regime::IndexOne) return relative(lhs - mu + f.v1_constant(), rhs, lhs);
  return relative(lhs, 1.0 + rhs, lhs);
}

double cosh_on_cut_residual(double mu, const Factorizer& f) {
  const Complex lhs = f.x_on_cut(mu) * std::cosh(f.theta_value(mu));
  if (f.regime() == Regime::IndexOne) {
    const Complex pv = cauchy_pv(
        [&](double t) {
          if (t <= 0.0) return Complex(0.0);
          return f.x_on_cut(t) * std::sinh(f.theta_value(t));
        },
        mu, outer_config(f));
    return relative(lhs, pv / (kPi * 1i), lhs);
  }
  const Complex pv =
      cauchy_pv([&](double t) { return weighted_density(t, f); }, mu, outer_config(f));
  return relative(lhs, 1.0 + pv / kPi, lhs);
}

}  // namespace bgk
