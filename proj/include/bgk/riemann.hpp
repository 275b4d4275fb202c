#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bgk/dispersion.hpp"

namespace bgk {

/// Continuous argument of G on a grid, plus ln|G| and the winding index.
struct AngleProfile {
  std::vector<double> grid;
  std::vector<double> theta;
  std::vector<double> ln_mod_g;
  int index = 0;
};

/// Riemann-problem coefficient G(mu) = lambda^+(mu) / lambda^-(mu).
/// Throws DegenerateDenominator if |lambda^-| < 1e-300.
std::complex<double> coefficient_g(double mu, const ProblemParams& p);

/// ln|G(mu)|, computed as log1p(-4 s omega1 / |lambda^-|^2) / 2 so that the tail
/// keeps full relative precision.
double ln_mod_g(double mu, const ProblemParams& p);

/// ln|G(mu)| + i theta(mu) from a single boundary-value evaluation.
std::complex<double> log_coefficient(double mu, const ProblemParams& p);

/// Closed-form argument of G for mu > 0.
///   index one:  arccot((l0^2 + w^2 - s^2) / (2 l0 s)), arccot in (0, pi), plus pi when l0 <= 0
///   index zero: arctan(2 l0 s / (l0^2 + w^2 - s^2))
/// The arctan form is continuous only when l0^2 + w^2 - s^2 > 0 on the whole
/// half-line, i.e. above critical_frequency(); see theta().
double theta_branch(double mu, const ProblemParams& p);

/// Continuous argument of G with theta(0) = 0, valid throughout each regime.
/// Agrees with theta_branch() wherever the latter is continuous.
double theta(double mu, const ProblemParams& p);

/// Phase-unwraps arg G along `grid` starting from theta(0) = 0. Throws
/// GridTooCoarse when two adjacent nodes differ by pi/2 or more.
AngleProfile theta_unwrapped(std::span<const double> grid, const ProblemParams& p);

/// 4000 logarithmic nodes on [1e-6, cutoff] merged with 2000 nodes clustered
/// cubically around mu0, where arg G turns fastest near the index threshold.
std::vector<double> default_angle_grid(double cutoff = 7.0);

/// zeta(mu) = theta(mu) - 2 pi; index-one regime only (throws WrongRegime).
double zeta(double mu, const ProblemParams& p);

struct CriticalFrequency {
  double omega_star = 0.0;  ///< max of sqrt(s^2 - lambda0^2)
  double argmax = 0.0;
  double window_lo = 0.0;   ///< feasible window s^2 >= lambda0^2 containing argmax
  double window_hi = 0.0;
};

/// Maximises sqrt(s^2 - lambda0^2) over (0, 7]: coarse scan with `scan_nodes`
/// nodes, then Brent refinement to ~1e-10 in mu.
///
/// This is the frequency above which the arctan form of theta_branch() is
/// continuous. The winding index itself changes at the lower value
/// index_threshold_frequency() = s(mu0).
CriticalFrequency critical_frequency(int scan_nodes = 10000);

}  // namespace bgk
