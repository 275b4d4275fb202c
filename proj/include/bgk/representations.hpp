#pragma once

#include <complex>

#include "bgk/factorization.hpp"

namespace bgk {

// Residuals of the integral representations satisfied by X. Each function
// evaluates both sides independently (the left side through V(z), the right
// side through nested boundary values) and returns
//   |lhs - rhs| / |scale|
// where `scale` is the quantity being represented, as noted per function.
// Off-cut functions take z off [0, inf); on-cut functions take 0 < mu < cutoff.
// Outer integrals use the factorizer's tolerances relaxed 100x.

/// X(z) = kappa0 + (1 / 2 pi i) int (X^+ - X^-)(u) / (u - z) du,
/// kappa0 = 0 in index one and 1 in index zero. Scale |X(z)|.
double jump_representation_residual(Complex z, const Factorizer& f);

/// X(z) = kappa0 + (1 / pi) int s(u) X^+(u) / (lambda^+(u) (u - z)) du. Scale |X(z)|.
double weighted_jump_representation_residual(Complex z, const Factorizer& f);

/// (1 / pi) int s(u) X^+(u) / lambda^+(u) du; equals -1 in index one.
Complex normalization_integral(const Factorizer& f);

/// Reciprocal form off the cut. Scale |1 / X(z)|.
///   index one:  1/X(z) - z + V1 = -(1 / pi i) int sinh Theta(t) / (X(t) (t - z)) dt
///   index zero: 1/X(z)          = 1 - (1 / pi i) int sinh Theta(t) / (X(t) (t - z)) dt
double reciprocal_representation_residual(Complex z, const Factorizer& f);

/// Reciprocal form on the cut, principal value. Scale |cosh Theta(mu) / X(mu)|.
///   index one:  cosh Theta / X - mu + V1 = -(1 / pi i) PV int sinh Theta / (X (t - mu)) dt
///   index zero: cosh Theta / X          = 1 - (1 / pi i) PV int sinh Theta / (X (t - mu)) dt
double reciprocal_on_cut_residual(double mu, const Factorizer& f);

/// Mean boundary value on the cut, principal value. Scale |X(mu) cosh Theta(mu)|.
///   index one:  X cosh Theta = (1 / pi i) PV int X(t) sinh Theta(t) / (t - mu) dt
///   index zero: X cosh Theta = 1 + (1 / pi) PV int s X^+ / (lambda^+ (t - mu)) dt
double cosh_on_cut_residual(double mu, const Factorizer& f);

}  // namespace bgk
