#include "bgk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "bgk/error.hpp"

namespace bgk {

namespace {

using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kRootTolerance = 1e-12;
constexpr int kNewtonIterations = 100;

void require_discrete_regime(const ProblemParams& p, const char* what) {
  if (p.regime() != Regime::IndexOne) {
    std::ostringstream msg;
    msg << what << ": omega1 = " << p.omega1()
        << " is in the index-zero regime, where lambda has no zeros (N = 2 kappa = 0)";
    throw Error(ErrorCode::WrongRegime, msg.str());
  }
  if (p.omega1() == 0.0) {
    std::ostringstream msg;
    msg << what << ": at omega1 = 0 both zeros sit at infinity; use the degenerate modes";
    throw Error(ErrorCode::WrongRegime, msg.str());
  }
}

bool selected(Complex z0, Complex eta) { return (z0 / eta).real() > 0.0; }

Complex newton(const ProblemParams& p, Complex z) {
  Complex value = lambda(z, p);
  for (int it = 0; it < kNewtonIterations; ++it) {
    if (std::abs(value) < kRootTolerance) return z;
    const double h = 1e-6 * std::abs(z);
    const Complex slope = (lambda(z + h, p) - lambda(z - h, p)) / (2.0 * h);
    const Complex step = value / slope;
    double damping = 1.0;
    Complex next = z - step;
    Complex next_value = lambda(next, p);
    for (int halvings = 0; halvings < 30 && std::abs(next_value) >= std::abs(value); ++halvings) {
      damping *= 0.5;
      next = z - damping * step;
      next_value = lambda(next, p);
    }
    if (!std::isfinite(std::abs(next)) || std::abs(next) > 1e6) break;
    z = next;
    value = next_value;
  }
  std::ostringstream msg;
  msg << "Newton on lambda did not reach |lambda| < " << kRootTolerance << " in "
      << kNewtonIterations << " iterations (last z = (" << z.real() << ", " << z.imag()
      << "), |lambda| = " << std::abs(value) << ")";
  throw Error(ErrorCode::NoConvergence, msg.str());
}

Complex pv_full_line(const RealToComplex& g, double eta, const QuadratureConfig& cfg) {
  // PV int_R g(mu) / (eta - mu) dmu
  //   = -[int_0^inf g(mu) / (mu - eta) dmu - int_0^inf g(-mu) / (mu + eta) dmu]
  auto mirrored = [&](double m) { return g(-m); };
  if (eta > 0.0) {
    const Complex right = cauchy_pv(g, eta, cfg);
    const Complex left = integrate_semi_infinite(
        [&](double m) { return mirrored(m) / (m + eta); }, cfg);
    return -(right - left);
  }
  const Complex right =
      integrate_semi_infinite([&](double m) { return g(m) / (m - eta); }, cfg);
  const Complex left = cauchy_pv(mirrored, -eta, cfg);
  return -(right - left);
}

}  // namespace

Complex eta0_asymptotic(double omega1) { return (1.0 + 1i) / (2.0 * std::sqrt(omega1)); }

Complex eta0_explicit(const Factorizer& f) {
  const ProblemParams& p = f.params();
  require_discrete_regime(p, "eta0_explicit");
  const Complex v_sum = f.v_of_z_accurate(1i) + f.v_of_z_accurate(-1i);
  const Complex square = -1.0 + (1i * lambda(1i, p) / p.omega1()) * std::exp(-v_sum);
  const Complex root = std::sqrt(square);

  const Complex z0 = p.z0();
  const double rule = (z0 / root).real();
  if (!std::isfinite(rule) || std::abs(rule) <= 1e-14 * std::abs(z0 / root)) {
    std::ostringstream msg;
    msg << "neither square root of eta0^2 = (" << square.real() << ", " << square.imag()
        << ") satisfies Re(z0 / eta0) > 0";
    throw Error(ErrorCode::BranchAmbiguity, msg.str());
  }
  return rule > 0.0 ? root : -root;
}

Complex eta0_newton_oracle(const ProblemParams& p) {
  require_discrete_regime(p, "eta0_newton_oracle");
  const Complex root = newton(p, eta0_asymptotic(p.omega1()));
  return selected(p.z0(), root) ? root : -root;
}

std::vector<Complex> zero_census(const ProblemParams& p, int seeds_per_half_plane,
                                 std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.05, 3.0);

  std::vector<Complex> roots;
  auto record = [&](Complex seed) {
    Complex root;
    try {
      root = newton(p, seed);
    } catch (const Error&) {
      return;
    }
    for (const Complex& known : roots)
      if (std::abs(known - root) < 1e-8 * std::max(1.0, std::abs(root))) return;
    roots.push_back(root);
  };
  for (int k = 0; k < seeds_per_half_plane; ++k) record({re(rng), im(rng)});
  for (int k = 0; k < seeds_per_half_plane; ++k) record({re(rng), -im(rng)});
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return a.imag() > b.imag(); });
  return roots;
}

std::vector<Complex> standard_factorization_grid(int radii) {
  std::vector<Complex> grid;
  grid.reserve(6 * radii);
  for (double angle : {0.25 * kPi, 0.5 * kPi, 0.75 * kPi}) {
    for (int k = 0; k < radii; ++k) {
      const double r = 0.5 * std::pow(40.0, static_cast<double>(k) / (radii - 1));
      const Complex z = std::polar(r, angle);
      grid.push_back(z);
      grid.push_back(std::conj(z));
    }
  }
  return grid;
}

double factorization_residual(std::span<const Complex> z_grid, const Factorizer& f) {
  if (f.regime() == Regime::IndexOne) return factorization_residual(z_grid, f, eta0_explicit(f));
  return factorization_residual(z_grid, f, 0.0);
}

double factorization_residual(std::span<const Complex> z_grid, const Factorizer& f,
                              Complex eta0) {
  const ProblemParams& p = f.params();
  const double w = p.omega1();
  double worst = 0.0;
  for (const Complex& z : z_grid) {
    const Complex lhs = lambda(z, p);
    const Complex pair = f.x_of_z(z) * f.x_of_z(-z);
    const Complex rhs = f.regime() == Regime::IndexOne ? 1i * w * (z * z - eta0 * eta0) * pair
                                                       : -1i * w * pair;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

double boundary_factorization_residual(std::span<const double> mu_grid, const Factorizer& f) {
  const ProblemParams& p = f.params();
  const bool index_one = f.regime() == Regime::IndexOne;
  const Complex eta0 = index_one ? eta0_explicit(f) : 0.0;
  const Complex iw = 1i * p.omega1();

  double worst = 0.0;
  for (double mu : mu_grid) {
    if (mu == 0.0) throw Error(ErrorCode::ZeroArgument, "boundary grid must avoid mu = 0");
    const Complex c = index_one ? iw * (mu * mu - eta0 * eta0) : -iw;
    const BoundaryPair lam = lambda_boundary(mu, p);
    Complex plus;
    Complex minus;
    if (mu > 0.0) {
      const BoundaryPair x = f.x_boundary(mu);
      const Complex mirror = f.x_of_z(-mu);
      plus = c * x.plus * mirror;
      minus = c * x.minus * mirror;
    } else {
      const BoundaryPair x = f.x_boundary(-mu);
      const Complex here = f.x_of_z(mu);
      plus = c * here * x.minus;
      minus = c * here * x.plus;
    }
    worst = std::max(worst, std::abs(lam.plus - plus) / std::abs(lam.plus));
    worst = std::max(worst, std::abs(lam.minus - minus) / std::abs(lam.minus));
  }
  return worst;
}

double nonlinear_representation_residual(Complex z, const Factorizer& f) {
  const ProblemParams& p = f.params();
  require_discrete_regime(p, "nonlinear_representation_residual");
  const Complex eta0 = eta0_explicit(f);
  const Complex x = f.x_of_z(z);
  const Complex integral = integrate_semi_infinite(
      [&](double mu) -> Complex {
        if (mu <= 0.0) return 0.0;
        return half_jump(mu) / ((mu * mu - eta0 * eta0) * f.x_of_z(-mu) * (mu - z));
      },
      f.config().relaxed(100.0));
  const Complex rhs = integral / (1i * p.omega1() * kPi);
  return std::abs(x - rhs) / std::abs(x);
}

SpectrumResult analyze_spectrum(const Factorizer& f) {
  const ProblemParams& p = f.params();
  SpectrumResult out;
  out.eta0_asymptotic = eta0_asymptotic(p.omega1());
  const auto grid = standard_factorization_grid();
  if (f.regime() == Regime::IndexOne) {
    out.eta0 = eta0_explicit(f);
    out.eta0_oracle = eta0_newton_oracle(p);
    out.factorization_residual_max = factorization_residual(grid, f, *out.eta0);
  } else {
    out.factorization_residual_max = factorization_residual(grid, f, 0.0);
  }
  out.count = static_cast<int>(zero_census(p).size());
  return out;
}

Complex Eigenfunction::apply(const RealToComplex& g, const QuadratureConfig& cfg) const {
  switch (kind) {
    case EigenKind::Continuum: {
      const double e = eta.real();
      Complex out = singular_coefficient.value_or(0.0) * g(e);
      if (pv_coefficient != 0.0) out += pv_coefficient * pv_full_line(g, e, cfg);
      return out;
    }
    case EigenKind::Discrete: {
      const Complex right =
          integrate_semi_infinite([&](double m) { return g(m) / (eta - m); }, cfg);
      const Complex left =
          integrate_semi_infinite([&](double m) { return g(-m) / (eta + m); }, cfg);
      return pv_coefficient * (right + left);
    }
    default:
      throw Error(ErrorCode::InvalidConfig,
                  "degenerate modes are spatial solutions; use kinetic_mode()");
  }
}

Eigenfunction continuum_eigenfunction(double eta, const ProblemParams& p) {
  Eigenfunction e;
  e.kind = EigenKind::Continuum;
  e.eta = eta;
  e.pv_coefficient = eta * kInvSqrtPi;
  e.singular_coefficient = std::exp(eta * eta) * Complex(lambda0_real(eta), -p.omega1());
  return e;
}

Eigenfunction discrete_eigenfunction(Complex eta0) {
  Eigenfunction e;
  e.kind = EigenKind::Discrete;
  e.eta = eta0;
  e.pv_coefficient = eta0 * kInvSqrtPi;
  return e;
}

std::vector<Eigenfunction> discrete_spectrum(const Factorizer& f) {
  if (f.regime() != Regime::IndexOne) return {};
  if (f.params().omega1() == 0.0) {
    Eigenfunction h1;
    h1.kind = EigenKind::DegenerateH1;
    Eigenfunction h2;
    h2.kind = EigenKind::DegenerateH2;
    return {h1, h2};
  }
  return {discrete_eigenfunction(eta0_explicit(f))};
}

KineticMode kinetic_mode(const Eigenfunction& e, const ProblemParams& p) {
  switch (e.kind) {
    case EigenKind::DegenerateH1:
      return {[](double, double) { return Complex(1.0); },
              [](double, double) { return Complex(0.0); }};
    case EigenKind::DegenerateH2:
      return {[](double x, double mu) { return Complex(x - mu); },
              [](double, double) { return Complex(1.0); }};
    case EigenKind::Discrete: {
      const Complex eta0 = e.eta;
      const Complex rate = p.z0() / eta0;
      auto value = [eta0, rate](double x, double mu) {
        return kInvSqrtPi * std::exp(-x * rate) * eta0 / (eta0 - mu);
      };
      return {value, [value, rate](double x, double mu) { return -rate * value(x, mu); }};
    }
    default:
      throw Error(ErrorCode::InvalidConfig, "continuum eigenfunctions have no pointwise mode");
  }
}

Complex discrete_solution(double x1, double mu, const Factorizer& f) {
  require_discrete_regime(f.params(), "discrete_solution");
  return kinetic_mode(discrete_eigenfunction(eta0_explicit(f)), f.params()).value(x1, mu);
}

double kinetic_residual(const KineticMode& mode, double x1, double mu, const ProblemParams& p,
                        const QuadratureConfig& cfg) {
  const double t = cfg.cutoff;
  QuadratureConfig tight = cfg;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-13;
  const Complex collision =
      kInvSqrtPi * integrate([&](double m) { return std::exp(-m * m) * mode.value(x1, m); }, -t,
                             t, tight, {0.0});
  const Complex lhs = mu * mode.x_derivative(x1, mu) + p.z0() * mode.value(x1, mu);
  return std::abs(lhs - collision);
}

}  // namespace bgk
