#pragma once

#include <complex>

#include "bgk/dispersion.hpp"
#include "bgk/quadrature.hpp"
#include "bgk/riemann.hpp"

namespace bgk {

/// Solution X(z) of the homogeneous Riemann problem X^+ / X^- = G on (0, inf).
///
///   V(z) = (1 / 2 pi i) int_0^inf psi(u) / (u - z) du,  psi = ln|G| + i (theta - 2 pi kappa)
///   X(z) = exp(V(z)) / z   (index one),   X(z) = exp(V(z))   (index zero)
///
/// On the cut X(mu) uses the principal value of V, and X^{+-}(mu) = X(mu) exp(+-Theta(mu))
/// with Theta = psi / 2, so the hyperbolic boundary identities hold by construction.
///
/// Immutable after construction; every method is a pure function of the
/// parameters, the angle profile and the quadrature configuration.
class Factorizer {
 public:
  /// Builds and checks the angle profile. Throws IndexMismatch if the
  /// unwrapped index disagrees with the regime of `params`.
  explicit Factorizer(ProblemParams params, QuadratureConfig cfg = {});

  const ProblemParams& params() const { return params_; }
  const AngleProfile& profile() const { return profile_; }
  const QuadratureConfig& config() const { return cfg_; }
  Regime regime() const { return params_.regime(); }

  /// psi(mu) = ln|G(mu)| + i (theta(mu) - 2 pi kappa).
  Complex density(double mu) const;
  /// Theta(mu) = psi(mu) / 2.
  Complex theta_value(double mu) const;

  /// Cauchy integral off the cut. Throws OnCut for real z >= 0 and NearCut for
  /// |Im z| < 1e-4 with 0 < Re z < cutoff.
  Complex v_of_z(Complex z) const;
  /// Same integral with tolerances tightened 100x.
  Complex v_of_z_accurate(Complex z) const;
  /// Principal value V(mu) on the cut, 0 < mu < cutoff.
  Complex v_principal(double mu) const;
  /// V^{+-}(mu) = V(mu) +- Theta(mu).
  BoundaryPair v_boundary(double mu) const;

  /// Throws ZeroArgument at z = 0 in index one, then as v_of_z.
  Complex x_of_z(Complex z) const;
  /// X(mu) on the cut, built from the principal value of V.
  Complex x_on_cut(double mu) const;
  /// X^{+-}(mu) = X(mu) exp(+-Theta(mu)).
  BoundaryPair x_boundary(double mu) const;

  /// V1 = -(1 / 2 pi i) int_0^inf psi(u) du, the constant term of 1/X - z at infinity.
  Complex v1_constant() const;

 private:
  Complex cauchy_integral(Complex z, const QuadratureConfig& cfg) const;

  ProblemParams params_;
  QuadratureConfig cfg_;
  AngleProfile profile_;
  double mu0_;
};

}  // namespace bgk
