#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bgk/error.hpp"
#include "bgk/factorization.hpp"
#include "bgk/representations.hpp"
#include "generators.hpp"
#include "oracle_values.hpp"

using namespace std::complex_literals;
using bgk::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

// ln G from the t-integral lambda0 and the principal logarithm, moved onto the
// branch that starts at 0 (index zero) or -2 pi i (index one) at the origin.
// G is formed as (l0^2 + w^2 - s^2 + 2 i l0 s) / |lambda^-|^2 so that the sign of
// its tiny imaginary part survives far out on the axis.
Complex reference_density(double u, double w, int kappa) {
  const double l0 = bgk::lambda0_real(u);
  const double s = bgk::half_jump(u);
  const Complex g = Complex(l0 * l0 + w * w - s * s, 2.0 * l0 * s) / (l0 * l0 + (s + w) * (s + w));
  Complex psi = std::log(g);
  if (kappa == 1 && psi.imag() >= 0.0) psi -= 2.0i * kPi;
  return psi;
}

// Trapezoid rule on a uniform grid of n + 1 nodes over [0, 7].
Complex trapezoid_v(Complex z, double w, int kappa, int n) {
  const double h = 7.0 / n;
  Complex sum = 0.5 * (reference_density(0.0, w, kappa) / (0.0 - z) + reference_density(7.0, w, kappa) / (7.0 - z));
  for (int k = 1; k < n; ++k) {
    const double u = k * h;
    sum += reference_density(u, w, kappa) / (u - z);
  }
  return sum * h / (2.0i * kPi);
}

bgk::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bgk::Error& e) {
    return e.code();
  }
  FAIL("expected bgk::Error");
  return bgk::ErrorCode::InvalidConfig;
}

const bgk::Factorizer& factorizer(double w) {
  static std::vector<std::pair<double, bgk::Factorizer>> cache;
  for (auto& [key, f] : cache)
    if (key == w) return f;
  cache.emplace_back(w, bgk::Factorizer(bgk::ProblemParams(w)));
  return cache.back().second;
}

}  // namespace

TEST_CASE("factorizer profile agrees with the regime") {
  CHECK(factorizer(0.3).profile().index == 1);
  CHECK(factorizer(1.0).profile().index == 0);
  CHECK(factorizer(0.3).regime() == bgk::Regime::IndexOne);
}

TEST_CASE("density and Theta") {
  const auto& f = factorizer(0.3);
  CHECK(std::abs(f.density(0.0) + 2.0i * kPi) < 1e-15);
  CHECK(std::abs(f.density(7.0)) < 1e-18);
  Draw draw(41);
  for (int trial = 0; trial < 50; ++trial) {
    const double u = draw.uniform(1e-4, 6.9);
    CHECK(std::abs(f.density(u) - reference_density(u, 0.3, 1)) < 1e-12);
    CHECK(std::abs(factorizer(1.0).density(u) - reference_density(u, 1.0, 0)) < 1e-12);
    CHECK(f.theta_value(u) == 0.5 * f.density(u));
  }
}

TEST_CASE("V(+-i) against high-precision quadrature") {
  const auto& f = factorizer(0.3);
  CHECK(std::abs(f.v_of_z(1i) - oracle::kVPlusI_03) < 1e-10);
  CHECK(std::abs(f.v_of_z(-1i) - oracle::kVMinusI_03) < 1e-10);
  CHECK(std::abs(f.v_of_z_accurate(1i) - oracle::kVPlusI_03) < 1e-12);
  CHECK(std::abs(f.v_of_z_accurate(-1i) - oracle::kVMinusI_03) < 1e-12);
}

TEST_CASE("V(i) against a million-node trapezoid rule") {
  const Complex dense = trapezoid_v(1i, 0.3, 1, 1000000);
  CHECK(std::abs(factorizer(0.3).v_of_z(1i) - dense) < 1e-8);
}

TEST_CASE("V1 constant") {
  CHECK(std::abs(factorizer(1.0).v1_constant() - oracle::kV1_10) < 1e-9);
  CHECK(std::abs(factorizer(0.3).v1_constant() - oracle::kV1_03) < 1e-9);
  // vanishing density for large omega1
  double prev = std::abs(factorizer(1.0).v1_constant());
  for (double w : {4.0, 16.0, 64.0}) {
    const double now = std::abs(bgk::Factorizer(bgk::ProblemParams(w)).v1_constant());
    CHECK(now < prev);
    prev = now;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("V decays at infinity") {
  for (double w : {0.3, 1.0}) {
    const auto& f = factorizer(w);
    const Complex z = std::polar(1e3, 0.75 * kPi);
    // V(z) ~ V1 / z
    CHECK(std::abs(z * f.v_of_z(z) - f.v1_constant()) < 5e-3 * std::abs(f.v1_constant()) + 1e-6);
  }
}

TEST_CASE("logarithmic behaviour at the origin") {
  // index one: psi(0) = -2 pi i makes V(z) ~ ln z + O(1), so Re V -> -infinity
  const auto& one = factorizer(0.3);
  const Complex step = one.v_of_z(-1e-5) - one.v_of_z(-1e-4);
  CHECK(step.real() == doctest::Approx(std::log(0.1)).epsilon(1e-3));
  CHECK(one.v_of_z(-1e-8).real() < one.v_of_z(-1e-4).real() - 9.0);
  // index zero: psi(0) = 0 and V stays bounded
  const auto& zero = factorizer(1.0);
  CHECK(std::abs(zero.v_of_z(-1e-8) - zero.v_of_z(-1e-4)) < 1e-3);
}

TEST_CASE("boundary values of V: Sokhotski relations and off-cut limit") {
  const auto& f = factorizer(0.3);
  for (double mu : {0.05, 0.6, 0.924, 2.5}) {
    const bgk::BoundaryPair v = f.v_boundary(mu);
    CHECK(std::abs(v.jump() - 2.0 * f.theta_value(mu)) < 1e-15);
    CHECK(std::abs(v.mean() - f.v_principal(mu)) < 1e-15);
  }
  // Richardson extrapolation of V(0.6 + i e) for e = 4e-3, 2e-3, 1e-3 (error O(e^3)).
  const double mu = 0.6;
  const Complex a = f.v_of_z({mu, 4e-3}), b = f.v_of_z({mu, 2e-3}), c = f.v_of_z({mu, 1e-3});
  const Complex ab = 2.0 * b - a, bc = 2.0 * c - b;
  const Complex limit = (4.0 * bc - ab) / 3.0;
  CHECK(std::abs(f.v_boundary(mu).plus - limit) < 1e-7);
  const Complex below = (4.0 * (2.0 * f.v_of_z({mu, -1e-3}) - f.v_of_z({mu, -2e-3})) -
                         (2.0 * f.v_of_z({mu, -2e-3}) - f.v_of_z({mu, -4e-3}))) / 3.0;
  CHECK(std::abs(f.v_boundary(mu).minus - below) < 1e-7);
}

TEST_CASE("X boundary values solve the Riemann problem") {
  Draw draw(42);
  for (double w : {0.1, 0.3, 0.5, 1.0, 2.0}) {
    const auto& f = factorizer(w);
    for (int trial = 0; trial < 8; ++trial) {
      const double mu = draw.log_uniform(1e-3, 6.5);
      const bgk::BoundaryPair x = f.x_boundary(mu);
      const Complex g = bgk::coefficient_g(mu, f.params());
      CHECK(std::abs(x.plus / x.minus - g) / std::abs(g) < 1e-9);
      const Complex th = f.theta_value(mu);
      const Complex xm = f.x_on_cut(mu);
      CHECK(std::abs(x.mean() - xm * std::cosh(th)) < 1e-13 * std::abs(xm));
      CHECK(std::abs(1.0 / x.plus - 1.0 / x.minus + 2.0 * std::sinh(th) / xm) < 1e-12 / std::abs(xm));
    }
  }
}

TEST_CASE("limits of X at infinity") {
  const Complex far = std::polar(1e3, 0.75 * kPi);
  CHECK(std::abs(far * factorizer(0.3).x_of_z(far) - 1.0) < 1e-3);
  CHECK(std::abs(factorizer(1.0).x_of_z(far) - 1.0) < 1e-3);
  // the 1/|z| constant is V1 in both regimes
  for (double w : {0.3, 1.0}) {
    const auto& f = factorizer(w);
    const bool one = f.regime() == bgk::Regime::IndexOne;
    for (double r : {1e2, 1e3, 1e4}) {
      const Complex z = std::polar(r, 0.6 * kPi);
      const Complex x = f.x_of_z(z);
      const Complex defect = one ? z * x - 1.0 : x - 1.0;
      CHECK(std::abs(z * defect - f.v1_constant()) < 20.0 / r);
    }
  }
}

TEST_CASE("reciprocal of X grows like z - V1") {
  const auto& f = factorizer(0.3);
  const Complex z = std::polar(1e2, 0.4 * kPi);
  CHECK(std::abs(1.0 / f.x_of_z(z) - z + f.v1_constant()) * std::abs(z) < 10.0);
}

TEST_CASE("domain errors") {
  const auto& one = factorizer(0.3);
  const auto& zero = factorizer(1.0);
  CHECK(code_of([&] { one.v_of_z(2.0); }) == bgk::ErrorCode::OnCut);
  CHECK(code_of([&] { zero.x_of_z(0.0); }) == bgk::ErrorCode::OnCut);
  CHECK(code_of([&] { one.x_of_z(0.0); }) == bgk::ErrorCode::ZeroArgument);
  CHECK(code_of([&] { one.v_of_z({2.0, 1e-5}); }) == bgk::ErrorCode::NearCut);
  CHECK(code_of([&] { one.v_boundary(7.5); }) == bgk::ErrorCode::PoleOutOfRange);
  CHECK_NOTHROW(one.v_of_z({8.0, 1e-5}));
  CHECK_NOTHROW(one.v_of_z(-3.0));
}

TEST_CASE("evaluation order does not change results") {
  const auto& f = factorizer(0.3);
  Draw draw(43);
  std::vector<Complex> zs;
  for (int k = 0; k < 20; ++k) zs.push_back(draw.off_axis(0.1, 30.0, 0.1));
  std::vector<Complex> forward, backward(zs.size());
  for (const Complex& z : zs) forward.push_back(f.x_of_z(z));
  for (std::size_t k = zs.size(); k-- > 0;) backward[k] = f.x_of_z(zs[k]);
  CHECK(forward == backward);
}

TEST_CASE("integral representations in index one") {
  for (auto [w, z] : {std::pair{0.3, Complex(-1.0)}, {0.3, 2.0i}, {0.5, -0.5 + 0.5i}}) {
    const auto& f = factorizer(w);
    CHECK(bgk::jump_representation_residual(z, f) < 1e-6);
    CHECK(bgk::weighted_jump_representation_residual(z, f) < 1e-6);
  }
  for (double w : {0.1, 0.3, 0.5})
    CHECK(std::abs(bgk::normalization_integral(factorizer(w)) + 1.0) < 1e-6);
  CHECK(bgk::reciprocal_representation_residual(-2.0, factorizer(0.3)) < 1e-6);
  CHECK(bgk::reciprocal_representation_residual(3.0i, factorizer(0.1)) < 1e-6);
  CHECK(bgk::reciprocal_on_cut_residual(0.8, factorizer(0.3)) < 1e-5);
  for (double mu : {0.3, 0.9, 2.0}) CHECK(bgk::cosh_on_cut_residual(mu, factorizer(0.3)) < 1e-5);
  // near the origin the log feature degrades the on-cut forms
  CHECK(bgk::cosh_on_cut_residual(1e-3, factorizer(0.3)) < 1e-3);
}

TEST_CASE("normalization follows from the leading asymptotics") {
  // X(z) ~ -(1/z) (1/pi) int s X+ / lambda+, and z X(z) -> 1.
  const auto& f = factorizer(0.3);
  const Complex z = std::polar(1e4, 0.5 * kPi);
  CHECK(std::abs(-z * f.x_of_z(z) - bgk::normalization_integral(f)) < 1e-3);
}

TEST_CASE("integral representations in index zero") {
  for (auto [w, z] : {std::pair{1.0, Complex(-1.0)}, {2.0, 1.0 + 2.0i}}) {
    const auto& f = factorizer(w);
    CHECK(bgk::jump_representation_residual(z, f) < 1e-6);
    CHECK(bgk::weighted_jump_representation_residual(z, f) < 1e-6);
    CHECK(bgk::reciprocal_representation_residual(z, f) < 1e-6);
  }
  CHECK(bgk::reciprocal_on_cut_residual(0.5, factorizer(1.0)) < 1e-5);
  CHECK(bgk::cosh_on_cut_residual(0.5, factorizer(1.0)) < 1e-5);
  CHECK(bgk::cosh_on_cut_residual(0.7, factorizer(1.0)) < 1e-5);
}

TEST_CASE("jump representation at random off-cut points") {
  Draw draw(44);
  for (double w : {0.2, 1.5}) {
    const auto& f = factorizer(w);
    for (int trial = 0; trial < 5; ++trial) {
      const Complex z = draw.off_axis(0.2, 10.0, 0.2);
      CHECK(bgk::jump_representation_residual(z, f) < 1e-6);
      CHECK(bgk::reciprocal_representation_residual(z, f) < 1e-6);
    }
  }
}
