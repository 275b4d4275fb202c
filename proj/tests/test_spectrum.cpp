#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bgk/error.hpp"
#include "bgk/spectrum.hpp"
#include "generators.hpp"
#include "oracle_values.hpp"

using namespace std::complex_literals;
using bgk::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

bgk::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bgk::Error& e) {
    return e.code();
  }
  FAIL("expected bgk::Error");
  return bgk::ErrorCode::InvalidConfig;
}

}  // namespace

TEST_CASE("closed-form zero against high-precision roots") {
  for (const auto& pt : oracle::kEta0) {
    const bgk::Factorizer f{bgk::ProblemParams(pt.omega1)};
    const Complex eta = bgk::eta0_explicit(f);
    CHECK(std::abs(eta - pt.eta0) < 1e-9 * std::abs(pt.eta0));
    const Complex z0 = f.params().z0();
    CHECK((z0 / eta).real() > 0.0);
  }
}

TEST_CASE("Newton oracle against high-precision roots and the closed form") {
  for (const auto& pt : oracle::kEta0) {
    const bgk::ProblemParams p(pt.omega1);
    const Complex root = bgk::eta0_newton_oracle(p);
    CHECK(std::abs(root - pt.eta0) < 1e-10 * std::abs(pt.eta0));
    CHECK(std::abs(bgk::lambda(root, p)) < 1e-12);
    CHECK(std::abs(bgk::lambda(-root, p)) < 1e-10);
    const bgk::Factorizer f(p);
    CHECK(std::abs(bgk::eta0_explicit(f) - root) < 1e-8);
  }
}

TEST_CASE("small-frequency asymptote") {
  CHECK(bgk::eta0_asymptotic(0.01) == Complex(5.0, 5.0));
  double prev = INFINITY;
  for (double w : {0.3, 0.1, 0.03, 0.01}) {
    const bgk::Factorizer f{bgk::ProblemParams(w)};
    const Complex a = bgk::eta0_asymptotic(w);
    const double dev = std::abs(bgk::eta0_explicit(f) - a) / std::abs(a);
    CHECK(dev < prev);
    prev = dev;
  }
  CHECK(prev < 0.05);
  // |eta0| grows without bound as omega1 -> 0
  CHECK(std::abs(bgk::eta0_newton_oracle(bgk::ProblemParams(1e-4))) > 50.0);
}

TEST_CASE("regime gating of the discrete spectrum") {
  const bgk::Factorizer zero{bgk::ProblemParams(1.0)};
  CHECK(code_of([&] { bgk::eta0_explicit(zero); }) == bgk::ErrorCode::WrongRegime);
  CHECK(code_of([] { bgk::eta0_newton_oracle(bgk::ProblemParams(1.0)); }) == bgk::ErrorCode::WrongRegime);
  CHECK(code_of([&] { bgk::discrete_solution(0.0, 0.5, zero); }) == bgk::ErrorCode::WrongRegime);
  CHECK(code_of([&] { bgk::nonlinear_representation_residual(-1.0, zero); }) == bgk::ErrorCode::WrongRegime);
  CHECK(bgk::discrete_spectrum(zero).empty());
}

TEST_CASE("zero census: two zeros in index one, none in index zero") {
  for (double w : {0.1, 0.3, 0.5}) {
    const bgk::ProblemParams p(w);
    const auto roots = bgk::zero_census(p);
    REQUIRE(roots.size() == 2);
    const Complex eta = bgk::eta0_newton_oracle(p);
    CHECK(std::abs(roots[0] - eta) < 1e-8);
    CHECK(std::abs(roots[1] + eta) < 1e-8);
  }
  for (double w : {0.8, 1.0, 2.0, 5.0}) CHECK(bgk::zero_census(bgk::ProblemParams(w)).empty());
}

TEST_CASE("factorization of the dispersion function") {
  const auto grid = bgk::standard_factorization_grid();
  CHECK(grid.size() == 600);
  for (const Complex& z : grid) CHECK(z.imag() != 0.0);
  for (double w : {0.1, 0.3, 0.5, 1.0, 2.0}) {
    const bgk::Factorizer f{bgk::ProblemParams(w)};
    CHECK(bgk::factorization_residual(grid, f) < 1e-6);
  }
}

TEST_CASE("factorization at random off-axis points") {
  Draw draw(51);
  for (double w : {0.05, 0.6, 0.9, 3.0}) {
    const bgk::Factorizer f{bgk::ProblemParams(w)};
    std::vector<Complex> zs;
    for (int k = 0; k < 30; ++k) zs.push_back(draw.off_axis(0.05, 50.0, 0.05));
    CHECK(bgk::factorization_residual(zs, f) < 1e-6);
  }
}

TEST_CASE("boundary factorization on both half-axes") {
  const std::vector<double> grid{0.3, -0.3, 0.9, -0.9, 2.0, -2.0};
  for (double w : {0.3, 2.0}) {
    const bgk::Factorizer f{bgk::ProblemParams(w)};
    CHECK(bgk::boundary_factorization_residual(grid, f) < 1e-6);
  }
  const bgk::Factorizer f{bgk::ProblemParams(0.3)};
  const std::vector<double> bad{0.0};
  CHECK(code_of([&] { bgk::boundary_factorization_residual(bad, f); }) == bgk::ErrorCode::ZeroArgument);
}

TEST_CASE("nonlinear representation") {
  for (auto [w, z] : {std::pair{0.3, Complex(-1.0)}, {0.3, 2.0i}, {0.1, Complex(-0.5)}}) {
    const bgk::Factorizer f{bgk::ProblemParams(w)};
    CHECK(bgk::nonlinear_representation_residual(z, f) < 1e-6);
  }
}

TEST_CASE("spectrum summary") {
  const bgk::Factorizer one{bgk::ProblemParams(0.3)};
  const bgk::SpectrumResult r = bgk::analyze_spectrum(one);
  REQUIRE(r.eta0.has_value());
  REQUIRE(r.eta0_oracle.has_value());
  CHECK(std::abs(*r.eta0 - *r.eta0_oracle) < 1e-8);
  CHECK(r.count == 2 * one.params().index());
  CHECK(r.factorization_residual_max < 1e-6);
  const bgk::SpectrumResult z = bgk::analyze_spectrum(bgk::Factorizer{bgk::ProblemParams(1.0)});
  CHECK_FALSE(z.eta0.has_value());
  CHECK(z.count == 0);
}

TEST_CASE("continuum eigenfunction normalization") {
  Draw draw(52);
  auto gauss = [](double m) { return Complex(std::exp(-m * m)); };
  for (double w : {0.0, 0.3, 1.0}) {
    const bgk::ProblemParams p(w);
    for (int trial = 0; trial < 6; ++trial) {
      const double eta = draw.uniform(-4.0, 4.0);
      const bgk::Eigenfunction e = bgk::continuum_eigenfunction(eta, p);
      CHECK(e.kind == bgk::EigenKind::Continuum);
      CHECK(std::abs(e.apply(gauss) / p.z0() - 1.0) < 1e-9);
    }
  }
  const bgk::Eigenfunction at_zero = bgk::continuum_eigenfunction(0.0, bgk::ProblemParams(0.3));
  CHECK(at_zero.pv_coefficient == 0.0);
  CHECK(std::abs(*at_zero.singular_coefficient - Complex(1.0, -0.3)) < 1e-15);
  const bgk::Eigenfunction at_mu0 = bgk::continuum_eigenfunction(bgk::find_mu0(), bgk::ProblemParams(0.0));
  CHECK(std::abs(*at_mu0.singular_coefficient) < 1e-14);
}

TEST_CASE("continuum eigenfunction applied to a non-Gaussian test function") {
  // int Phi g for g = mu exp(-mu^2): PV part is (eta / sqrt(pi)) PV int mu e^{-mu^2} / (eta - mu)
  // = -eta lambda0(eta), so the total is exp(eta^2) lambda(eta) eta exp(-eta^2) - eta lambda0(eta).
  const bgk::ProblemParams p(0.4);
  for (double eta : {-2.0, -0.3, 0.7, 1.9}) {
    const bgk::Eigenfunction e = bgk::continuum_eigenfunction(eta, p);
    const Complex r = e.apply([](double m) { return Complex(m * std::exp(-m * m)); });
    CHECK(std::abs(r - Complex(0.0, -0.4 * eta)) < 1e-9);
  }
}

TEST_CASE("discrete mode: value, decay and kinetic equation") {
  const bgk::Factorizer f{bgk::ProblemParams(0.3)};
  const Complex eta = bgk::eta0_explicit(f);
  const Complex z0 = f.params().z0();
  CHECK(std::abs(bgk::discrete_solution(0.0, 0.5, f) - std::numbers::inv_sqrtpi * eta / (eta - 0.5)) < 1e-15);
  for (double x : {0.0, 1.0, 3.0}) {
    const double ratio = std::abs(bgk::discrete_solution(x + 1.0, 0.4, f) / bgk::discrete_solution(x, 0.4, f));
    CHECK(ratio == doctest::Approx(std::exp(-(z0 / eta).real())).epsilon(1e-12));
    CHECK(ratio < 1.0);
  }
  const auto spectrum = bgk::discrete_spectrum(f);
  REQUIRE(spectrum.size() == 1);
  const bgk::KineticMode mode = bgk::kinetic_mode(spectrum.front(), f.params());
  Draw draw(53);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(bgk::kinetic_residual(mode, draw.uniform(0.0, 4.0), draw.uniform(-3.0, 3.0), f.params()) < 1e-10);
  // normalization of the discrete member against exp(-mu^2): 1 - lambda0(eta0) = z0
  const Complex n = spectrum.front().apply([](double m) { return Complex(std::exp(-m * m)); });
  CHECK(std::abs(n - z0) < 1e-9);
}

TEST_CASE("degenerate modes at zero frequency") {
  const bgk::Factorizer f{bgk::ProblemParams(0.0)};
  const auto spectrum = bgk::discrete_spectrum(f);
  REQUIRE(spectrum.size() == 2);
  CHECK(spectrum[0].kind == bgk::EigenKind::DegenerateH1);
  CHECK(spectrum[1].kind == bgk::EigenKind::DegenerateH2);
  Draw draw(54);
  for (const auto& e : spectrum) {
    const bgk::KineticMode mode = bgk::kinetic_mode(e, f.params());
    for (int trial = 0; trial < 20; ++trial)
      CHECK(bgk::kinetic_residual(mode, draw.uniform(0.0, 5.0), draw.uniform(-3.0, 3.0), f.params()) < 1e-12);
  }
  CHECK(code_of([&] { bgk::discrete_solution(0.0, 0.5, f); }) == bgk::ErrorCode::WrongRegime);
  CHECK(code_of([&] { spectrum[0].apply([](double) { return Complex(1.0); }); }) == bgk::ErrorCode::InvalidConfig);
  // a perturbed mode is caught by the residual
  bgk::KineticMode wrong = bgk::kinetic_mode(spectrum[1], f.params());
  wrong.value = [](double x, double mu) { return Complex(x - 1.1 * mu); };
  CHECK(bgk::kinetic_residual(wrong, 1.0, 0.5, f.params()) > 1e-3);
}
