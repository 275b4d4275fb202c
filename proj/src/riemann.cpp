#include "bgk/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "bgk/error.hpp"

namespace bgk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ArgParts {
  double l0;
  double s;
  double re;  // G |lambda^-|^2 = (l0^2 + w^2 - s^2) + i (2 l0 s)
  double im;
};

ArgParts arg_parts(double mu, const ProblemParams& p) {
  const BoundaryPair bp = lambda_boundary(mu, p);
  const double l0 = bp.plus.real();
  const double s = half_jump(mu);
  const double w = p.omega1();
  return {l0, s, l0 * l0 + w * w - s * s, 2.0 * l0 * s};
}

double continuous_arg(const ArgParts& a, Regime regime) {
  const double principal = std::atan2(a.im, a.re);
  if (regime == Regime::IndexZero) return principal;
  // Index one: theta sits in [0, pi) while l0 > 0 and in [pi, 2 pi) after mu0.
  if (a.l0 < 0.0 && principal <= 0.0) return principal + kTwoPi;
  return principal;
}

}  // namespace

std::complex<double> coefficient_g(double mu, const ProblemParams& p) {
  const BoundaryPair bp = lambda_boundary(mu, p);
  if (std::abs(bp.minus) < 1e-300) {
    std::ostringstream msg;
    msg << "lambda^- vanishes at mu = " << mu << " (omega1 = " << p.omega1() << ")";
    throw Error(ErrorCode::DegenerateDenominator, msg.str());
  }
  return bp.plus / bp.minus;
}

double ln_mod_g(double mu, const ProblemParams& p) { return log_coefficient(mu, p).real(); }

std::complex<double> log_coefficient(double mu, const ProblemParams& p) {
  const BoundaryPair bp = lambda_boundary(mu, p);
  const double denom = std::norm(bp.minus);
  if (denom < 1e-300) {
    std::ostringstream msg;
    msg << "lambda^- vanishes at mu = " << mu;
    throw Error(ErrorCode::DegenerateDenominator, msg.str());
  }
  const double l0 = bp.plus.real();
  const double s = half_jump(mu);
  const double w = p.omega1();
  const ArgParts a{l0, s, l0 * l0 + w * w - s * s, 2.0 * l0 * s};
  return {0.5 * std::log1p(-4.0 * s * w / denom), continuous_arg(a, p.regime())};
}

double theta_branch(double mu, const ProblemParams& p) {
  const ArgParts a = arg_parts(mu, p);
  if (p.regime() == Regime::IndexZero) return std::atan(a.im / a.re);
  if (a.l0 == 0.0) return kPi;
  const double ratio = a.re / a.im;
  const double arccot = 0.5 * kPi - std::atan(ratio);
  return a.l0 > 0.0 ? arccot : arccot + kPi;
}

double theta(double mu, const ProblemParams& p) {
  return continuous_arg(arg_parts(mu, p), p.regime());
}

AngleProfile theta_unwrapped(std::span<const double> grid, const ProblemParams& p) {
  AngleProfile out;
  out.grid.assign(grid.begin(), grid.end());
  out.theta.reserve(grid.size());
  out.ln_mod_g.reserve(grid.size());

  double prev = 0.0;
  double prev_mu = 0.0;
  for (double mu : grid) {
    const ArgParts a = arg_parts(mu, p);
    const double principal = std::atan2(a.im, a.re);
    const double turns = std::round((prev - principal) / kTwoPi);
    const double value = principal + kTwoPi * turns;
    if (std::abs(value - prev) >= 0.5 * kPi) {
      std::ostringstream msg;
      msg << "arg G moves by " << std::abs(value - prev) << " between mu = " << prev_mu
          << " and mu = " << mu;
      throw Error(ErrorCode::GridTooCoarse, msg.str());
    }
    out.theta.push_back(value);
    out.ln_mod_g.push_back(ln_mod_g(mu, p));
    prev = value;
    prev_mu = mu;
  }
  out.index = out.theta.empty() ? 0 : static_cast<int>(std::lround(out.theta.back() / kTwoPi));
  return out;
}

std::vector<double> default_angle_grid(double cutoff) {
  constexpr int kLogNodes = 4000;
  constexpr int kClusterNodes = 2000;
  constexpr double kFirst = 1e-6;
  constexpr double kHalfWidth = 0.05;

  std::vector<double> grid;
  grid.reserve(kLogNodes + kClusterNodes);
  const double ratio = std::log(cutoff / kFirst);
  for (int k = 0; k < kLogNodes; ++k)
    grid.push_back(kFirst * std::exp(ratio * k / (kLogNodes - 1)));
  grid.back() = cutoff;

  const double mu0 = find_mu0();
  for (int k = 0; k < kClusterNodes; ++k) {
    const double u = -1.0 + 2.0 * k / (kClusterNodes - 1);
    const double mu = mu0 + kHalfWidth * u * u * u;
    if (mu > kFirst && mu < cutoff) grid.push_back(mu);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double zeta(double mu, const ProblemParams& p) {
  if (p.regime() != Regime::IndexOne) {
    std::ostringstream msg;
    msg << "zeta is only defined in the index-one regime (omega1 = " << p.omega1() << ")";
    throw Error(ErrorCode::WrongRegime, msg.str());
  }
  return theta(mu, p) - kTwoPi;
}

CriticalFrequency critical_frequency(int scan_nodes) {
  constexpr double kUpper = 7.0;
  auto maximand = [](double mu) {
    const double s = half_jump(mu);
    const double l0 = lambda0_real(mu);
    return s * s - l0 * l0;
  };

  std::vector<double> values(scan_nodes);
  int best = 0;
  for (int k = 0; k < scan_nodes; ++k) {
    values[k] = maximand(kUpper * (k + 1) / scan_nodes);
    if (values[k] > values[best]) best = k;
  }
  auto node = [&](int k) { return kUpper * (k + 1) / scan_nodes; };

  CriticalFrequency out;
  int lo = best;
  while (lo > 0 && values[lo - 1] >= 0.0) --lo;
  int hi = best;
  while (hi + 1 < scan_nodes && values[hi + 1] >= 0.0) ++hi;
  out.window_lo = node(lo);
  out.window_hi = node(hi);

  const double a = node(std::max(best - 1, 0));
  const double b = node(std::min(best + 1, scan_nodes - 1));
  std::uintmax_t iterations = 200;
  const auto [mu_star, neg_max] = boost::math::tools::brent_find_minima(
      [&](double mu) { return -maximand(mu); }, a, b, 40, iterations);
  out.argmax = mu_star;
  out.omega_star = std::sqrt(std::max(-neg_max, values[best]));
  return out;
}

}  // namespace bgk
