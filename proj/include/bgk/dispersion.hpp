#pragma once

#include <complex>

#include "bgk/quadrature.hpp"

namespace bgk {

enum class Regime { IndexOne, IndexZero };

constexpr int index_of(Regime regime) { return regime == Regime::IndexOne ? 1 : 0; }

/// Frequencies closer than this to the index threshold are rejected: the index
/// is discontinuous there and nothing is defined at the threshold itself.
inline constexpr double kCriticalGuardBand = 1e-3;

/// Frequency at which the winding number of G(mu) drops from 1 to 0.
///
/// Im G vanishes on mu > 0 only at the zero mu0 of lambda0, where
/// G(mu0) is proportional to omega1^2 - s(mu0)^2. The curve therefore
/// crosses the negative real axis (one full turn) iff omega1 < s(mu0).
double index_threshold_frequency();

/// Throws InvalidConfig for negative or non-finite frequencies and
/// CriticalGuardBand within kCriticalGuardBand of the threshold.
Regime classify_regime(double omega1);

/// Oscillation frequency, z0 = 1 - i omega1, and the index regime. Immutable.
class ProblemParams {
 public:
  explicit ProblemParams(double omega1);

  double omega1() const { return omega1_; }
  std::complex<double> z0() const { return {1.0, -omega1_}; }
  Regime regime() const { return regime_; }
  int index() const { return index_of(regime_); }

 private:
  double omega1_;
  Regime regime_;
};

/// Boundary values of a function from above (plus) and below (minus) a cut.
struct BoundaryPair {
  std::complex<double> plus;
  std::complex<double> minus;

  std::complex<double> jump() const { return plus - minus; }
  std::complex<double> mean() const { return 0.5 * (plus + minus); }
};

/// s(mu) = sqrt(pi) mu exp(-mu^2), half the jump of lambda across the real axis.
double half_jump(double mu);

/// lambda0 on the real axis from the one-dimensional form
///   1 - 2 mu^2 int_0^1 exp(-mu^2 (1 - t^2)) dt.
double lambda0_real(double mu);

/// Limit of lambda0 from the closed upper half plane (for real mu this is
/// lambda0(mu) + i s(mu)). Uses 1 + i sqrt(pi) z w(z) for |z| < 10 and a
/// cancellation-free Laplace continued fraction beyond.
std::complex<double> lambda0_upper(std::complex<double> z);

/// lambda0(z) = pi^{-1/2} int t exp(-t^2) / (t - z) dt off the real axis.
/// Lower half plane values come from conjugate symmetry. Throws OnRealAxis.
std::complex<double> lambda0_complex(std::complex<double> z);

/// Dispersion function lambda(z) = -i omega1 + lambda0(z). Throws OnRealAxis.
std::complex<double> lambda(std::complex<double> z, const ProblemParams& p);

/// lambda^{+-}(mu) = +-i s(mu) - i omega1 + lambda0(mu).
BoundaryPair lambda_boundary(double mu, const ProblemParams& p);

/// -i omega1 - 1/(2z^2) - 3/(4z^4) - 15/(8z^6). Throws TooClose for |z| <= 3.
std::complex<double> laurent_tail(std::complex<double> z, const ProblemParams& p);

/// Positive real zero of lambda0 (about 0.92414), bracketed on [0.5, 1.5].
double find_mu0();

}  // namespace bgk
