#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bgk/factorization.hpp"

namespace bgk {

/// (1 + i) / (2 sqrt(omega1)), the small-frequency limit of eta0.
Complex eta0_asymptotic(double omega1);

/// Zero of lambda from the closed form
///   eta0^2 = -1 + (i lambda(i) / omega1) exp(-V(i) - V(-i)),
/// with the square root chosen so that Re(z0 / eta0) > 0. V(+-i) use the
/// tightened quadrature path.
/// Throws WrongRegime in index zero or at omega1 = 0, BranchAmbiguity if neither
/// root satisfies the selection rule.
Complex eta0_explicit(const Factorizer& f);

/// Independent zero of lambda: damped complex Newton with a central-difference
/// derivative (step 1e-6 |z|), seeded at eta0_asymptotic, stopped at |lambda| < 1e-12.
/// Returns the root with Re(z0 / eta0) > 0.
/// Throws WrongRegime in index zero, NoConvergence after 100 iterations.
Complex eta0_newton_oracle(const ProblemParams& p);

/// Zeros of lambda reached by Newton from `seeds_per_half_plane` random seeds in
/// each half plane, merged when closer than 1e-8. Seeds that fail to converge
/// (or wander onto the real axis) contribute nothing.
std::vector<Complex> zero_census(const ProblemParams& p, int seeds_per_half_plane = 20,
                                 std::uint64_t rng_seed = 20240611);

/// 100 radii log-spaced on [0.5, 20] at arg z in {pi/4, pi/2, 3pi/4} and their
/// reflections into the lower half plane: 600 points.
std::vector<Complex> standard_factorization_grid(int radii = 100);

/// max over the grid of |lambda(z) - rhs| / |lambda(z)| where
///   rhs = i omega1 (z^2 - eta0^2) X(z) X(-z)   (index one)
///   rhs = -i omega1 X(z) X(-z)                 (index zero).
/// Grid points must lie off the real axis.
double factorization_residual(std::span<const Complex> z_grid, const Factorizer& f);

/// Same with eta0 supplied (index one) to avoid recomputing it.
double factorization_residual(std::span<const Complex> z_grid, const Factorizer& f, Complex eta0);

/// Boundary form of the factorization on both half-axes. With c = i omega1 (mu^2 - eta0^2)
/// in index one and c = -i omega1 in index zero:
///   mu > 0:  lambda^{+-}(mu) = c X^{+-}(mu) X(-mu)
///   mu < 0:  lambda^{+-}(mu) = c X(mu) X^{-+}(-mu)
/// Returns the max relative residual over the grid and both limits.
/// Grid entries must be nonzero with |mu| < cutoff.
double boundary_factorization_residual(std::span<const double> mu_grid, const Factorizer& f);

/// X(z) = (1 / (i omega1 pi)) int s(mu) / ((mu^2 - eta0^2) X(-mu) (mu - z)) dmu.
/// Relative residual against x_of_z. Index one only.
double nonlinear_representation_residual(Complex z, const Factorizer& f);

struct SpectrumResult {
  std::optional<Complex> eta0;
  Complex eta0_asymptotic;
  std::optional<Complex> eta0_oracle;
  double factorization_residual_max = 0.0;
  int count = 0;  ///< zeros found by zero_census; expected 2 kappa
};

SpectrumResult analyze_spectrum(const Factorizer& f);

enum class EigenKind { Continuum, Discrete, DegenerateH1, DegenerateH2 };

/// Eigenfunctions in velocity. The continuum member is the distribution
///   Phi(eta, mu) = (eta / sqrt(pi)) PV 1 / (eta - mu) + exp(eta^2) lambda(eta) delta(eta - mu),
/// normalised so that (1 / z0) int exp(-mu^2) Phi dmu = 1; lambda(eta) here is
/// -i omega1 + lambda0(eta) with the real-axis lambda0. The discrete member is
/// eta0 / (sqrt(pi) (eta0 - mu)). The degenerate kinds carry no coefficients.
struct Eigenfunction {
  EigenKind kind = EigenKind::Continuum;
  Complex eta;
  Complex pv_coefficient;
  std::optional<Complex> singular_coefficient;

  /// int Phi(eta, mu) g(mu) dmu over the real line, truncated at cfg.cutoff.
  /// The principal value is split into two half-line integrals.
  /// Throws PoleOutOfRange for |eta| >= cutoff, InvalidConfig for degenerate kinds.
  Complex apply(const RealToComplex& g, const QuadratureConfig& cfg = {}) const;
};

Eigenfunction continuum_eigenfunction(double eta, const ProblemParams& p);
Eigenfunction discrete_eigenfunction(Complex eta0);

/// Discrete eigenfunctions: {Discrete} for index one with omega1 > 0,
/// {DegenerateH1, DegenerateH2} at omega1 = 0, none in index zero.
std::vector<Eigenfunction> discrete_spectrum(const Factorizer& f);

/// Spatial solution h(x1, mu) of
///   mu dh/dx1 + z0 h = pi^{-1/2} int exp(-mu'^2) h(x1, mu') dmu'
/// together with its x1-derivative.
struct KineticMode {
  std::function<Complex(double, double)> value;
  std::function<Complex(double, double)> x_derivative;
};

/// Mode for a discrete or degenerate eigenfunction:
///   Discrete:      pi^{-1/2} exp(-x1 z0 / eta0) eta0 / (eta0 - mu)
///   DegenerateH1:  1
///   DegenerateH2:  x1 - mu
/// Throws InvalidConfig for the continuum kind.
KineticMode kinetic_mode(const Eigenfunction& e, const ProblemParams& p);

/// The discrete mode at (x1, mu). Throws WrongRegime in index zero and at omega1 = 0
/// (use the degenerate kinds there).
Complex discrete_solution(double x1, double mu, const Factorizer& f);

/// |mu h_x + z0 h - pi^{-1/2} int exp(-mu'^2) h(x1, mu') dmu'|, the collision
/// integral evaluated on [-cutoff, cutoff].
double kinetic_residual(const KineticMode& mode, double x1, double mu, const ProblemParams& p,
                        const QuadratureConfig& cfg = {});

}  // namespace bgk
