#include "bgk/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "bgk/error.hpp"

namespace bgk {

namespace {

using namespace std::complex_literals;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNearCut = 1e-4;

}  // namespace

Factorizer::Factorizer(ProblemParams params, QuadratureConfig cfg)
    : params_(params), cfg_(cfg), mu0_(find_mu0()) {
  cfg_.validate();
  const std::vector<double> grid = default_angle_grid(cfg_.cutoff);
  profile_ = theta_unwrapped(grid, params_);
  if (profile_.index != params_.index()) {
    std::ostringstream msg;
    msg << "unwrapped index " << profile_.index << " disagrees with regime index "
        << params_.index() << " at omega1 = " << params_.omega1();
    throw Error(ErrorCode::IndexMismatch, msg.str());
  }
}

Complex Factorizer::density(double mu) const {
  return log_coefficient(mu, params_) - Complex(0.0, kTwoPi * params_.index());
}

Complex Factorizer::theta_value(double mu) const { return 0.5 * density(mu); }

Complex Factorizer::cauchy_integral(Complex z, const QuadratureConfig& cfg) const {
  const double cut = cfg.cutoff;
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    std::ostringstream msg;
    msg << "z = " << z.real() << " lies on the cut; use the boundary values";
    throw Error(ErrorCode::OnCut, msg.str());
  }
  const bool over_cut = z.real() > 0.0 && z.real() < cut;
  if (over_cut && std::abs(z.imag()) < kNearCut) {
    std::ostringstream msg;
    msg << "z = (" << z.real() << ", " << z.imag() << ") is within " << kNearCut
        << " of the cut";
    throw Error(ErrorCode::NearCut, msg.str());
  }

  // Subtract the density at the point of the ray nearest to z; the remainder
  // is smooth and the subtracted term integrates to a logarithm.
  const double anchor = over_cut ? z.real() : 0.0;
  const Complex psi_anchor = density(anchor);
  auto integrand = [&](double u) { return (density(u) - psi_anchor) / (u - z); };

  std::vector<double> points{0.0, cut};
  for (double extra : {1.0, mu0_, anchor})
    if (extra > 0.0 && extra < cut) points.push_back(extra);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const QuadratureResult r = integrate_partition(integrand, points, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "V(z) at z = (" << z.real() << ", " << z.imag() << "): error estimate " << r.error;
    throw Error(ErrorCode::NonConvergence, msg.str());
  }
  const Complex log_term = std::log(cut - z) - std::log(-z);
  return (r.value + psi_anchor * log_term) / (kTwoPi * 1i);
}

Complex Factorizer::v_of_z(Complex z) const { return cauchy_integral(z, cfg_); }

Complex Factorizer::v_of_z_accurate(Complex z) const {
  return cauchy_integral(z, cfg_.tightened(100.0));
}

Complex Factorizer::v_principal(double mu) const {
  const Complex pv = cauchy_pv([this](double u) { return density(u); }, mu, cfg_, {mu0_});
  return pv / (kTwoPi * 1i);
}

BoundaryPair Factorizer::v_boundary(double mu) const {
  const Complex v = v_principal(mu);
  const Complex half = theta_value(mu);
  return {v + half, v - half};
}

Complex Factorizer::x_of_z(Complex z) const {
  if (params_.regime() == Regime::IndexOne) {
    if (z == 0.0) throw Error(ErrorCode::ZeroArgument, "X(z) has a pole at z = 0 in index one");
    return std::exp(v_of_z(z)) / z;
  }
  return std::exp(v_of_z(z));
}

Complex Factorizer::x_on_cut(double mu) const {
  const Complex e = std::exp(v_principal(mu));
  return params_.regime() == Regime::IndexOne ? e / mu : e;
}

BoundaryPair Factorizer::x_boundary(double mu) const {
  const Complex v = v_principal(mu);
  const Complex x = params_.regime() == Regime::IndexOne ? std::exp(v) / mu : std::exp(v);
  const Complex half = theta_value(mu);
  return {x * std::exp(half), x * std::exp(-half)};
}

Complex Factorizer::v1_constant() const {
  const Complex integral =
      integrate_semi_infinite([this](double u) { return density(u); }, cfg_, {mu0_});
  return -integral / (kTwoPi * 1i);
}

}  // namespace bgk
