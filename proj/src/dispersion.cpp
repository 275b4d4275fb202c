#include "bgk/dispersion.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "bgk/error.hpp"
#include "bgk/faddeeva.hpp"

namespace bgk {

namespace {

using namespace std::complex_literals;

constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;
constexpr double kContinuedFractionRadius = 10.0;
constexpr int kContinuedFractionDepth = 40;

// lambda0 = -q / (z - q) with q = (1/2) / (z - 1 / (z - (3/2) / (z - ...))),
// which is 1 + z Z(z) without the leading cancellation.
std::complex<double> lambda0_continued_fraction(std::complex<double> z) {
  std::complex<double> tail = z;
  for (int k = kContinuedFractionDepth; k >= 2; --k) tail = z - (0.5 * k) / tail;
  const std::complex<double> q = 0.5 / tail;
  return -q / (z - q);
}

}  // namespace

double half_jump(double mu) { return kSqrtPi * mu * std::exp(-mu * mu); }

double lambda0_real(double mu) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-13;
  const double m2 = mu * mu;
  if (m2 == 0.0) return 1.0;
  const Complex integral =
      integrate([m2](double t) { return Complex(std::exp(-m2 * (1.0 - t * t))); }, 0.0, 1.0, cfg);
  return 1.0 - 2.0 * m2 * integral.real();
}

std::complex<double> lambda0_upper(std::complex<double> z) {
  if (std::abs(z) >= kContinuedFractionRadius) return lambda0_continued_fraction(z);
  return 1.0 + 1i * kSqrtPi * z * faddeeva_upper(z);
}

std::complex<double> lambda0_complex(std::complex<double> z) {
  if (z.imag() == 0.0) {
    std::ostringstream msg;
    msg << "z = " << z.real() << " lies on the real axis; use boundary values";
    throw Error(ErrorCode::OnRealAxis, msg.str());
  }
  if (z.imag() > 0.0) return lambda0_upper(z);
  return std::conj(lambda0_upper(std::conj(z)));
}

std::complex<double> lambda(std::complex<double> z, const ProblemParams& p) {
  return -1i * p.omega1() + lambda0_complex(z);
}

BoundaryPair lambda_boundary(double mu, const ProblemParams& p) {
  // On the axis the Faddeeva form is used at every |mu|; the continued
  // fraction has convergent poles on the real line.
  const double l0 = (1.0 + 1i * kSqrtPi * mu * faddeeva_upper(mu)).real();
  const double s = half_jump(mu);
  const double w = p.omega1();
  return {{l0, s - w}, {l0, -s - w}};
}

std::complex<double> laurent_tail(std::complex<double> z, const ProblemParams& p) {
  if (!(std::abs(z) > 3.0)) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " <= 3; the asymptotic series is unreliable";
    throw Error(ErrorCode::TooClose, msg.str());
  }
  const std::complex<double> u = 1.0 / (z * z);
  return -1i * p.omega1() - u * (0.5 + u * (0.75 + u * 1.875));
}

double find_mu0() {
  static const double root = [] {
    std::uintmax_t iterations = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        [](double mu) { return lambda0_real(mu); }, 0.5, 1.5,
        boost::math::tools::eps_tolerance<double>(52), iterations);
    const double a = bracket.first;
    const double b = bracket.second;
    return std::abs(lambda0_real(a)) <= std::abs(lambda0_real(b)) ? a : b;
  }();
  return root;
}

double index_threshold_frequency() {
  static const double threshold = half_jump(find_mu0());
  return threshold;
}

Regime classify_regime(double omega1) {
  if (!std::isfinite(omega1) || omega1 < 0.0) {
    std::ostringstream msg;
    msg << "omega1 = " << omega1 << " must be finite and non-negative";
    throw Error(ErrorCode::InvalidConfig, msg.str());
  }
  const double threshold = index_threshold_frequency();
  if (std::abs(omega1 - threshold) < kCriticalGuardBand) {
    std::ostringstream msg;
    msg << "omega1 = " << omega1 << " is within critical guard band " << kCriticalGuardBand
        << " of the index threshold " << threshold;
    throw Error(ErrorCode::CriticalGuardBand, msg.str());
  }
  return omega1 < threshold ? Regime::IndexOne : Regime::IndexZero;
}

ProblemParams::ProblemParams(double omega1) : omega1_(omega1), regime_(classify_regime(omega1)) {}

}  // namespace bgk
