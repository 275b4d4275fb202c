#include "bgk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bgk/error.hpp"

namespace bgk {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Interval {
  double a;
  double b;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const { return x.error < y.error; }
};

// One (10, 21) panel with the QUADPACK error heuristic applied to complex
// magnitudes.
Interval gk21(const RealToComplex& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<Complex, 21> fv;
  fv[0] = f(center);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    fv[2 * i - 1] = f(center - dx);
    fv[2 * i] = f(center + dx);
  }

  Complex kronrod = wk[0] * fv[0];
  Complex gauss = 0.0;
  double abs_sum = wk[0] * std::abs(fv[0]);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const Complex pair = fv[2 * i - 1] + fv[2 * i];
    kronrod += wk[i] * pair;
    abs_sum += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 1) gauss += wg[i / 2] * pair;
  }

  const Complex mean = 0.5 * kronrod;
  double asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < xk.size(); ++i)
    asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));

  const double scale = std::abs(half);
  double err = std::abs(kronrod - gauss) * scale;
  const double resasc = asc * scale;
  const double resabs = abs_sum * scale;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);

  return {a, b, kronrod * half, err};
}

std::vector<double> merged_points(double a, double b, std::initializer_list<double> breakpoints) {
  std::vector<double> pts{a};
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::CriticalGuardBand: return "CriticalGuardBand";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::PoleOutOfRange: return "PoleOutOfRange";
    case ErrorCode::OnRealAxis: return "OnRealAxis";
    case ErrorCode::OnCut: return "OnCut";
    case ErrorCode::NearCut: return "NearCut";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::TooClose: return "TooClose";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
  }
  return "Unknown";
}

double gaussian_envelope(double cutoff) {
  return std::sqrt(std::numbers::pi) * cutoff * std::exp(-cutoff * cutoff);
}

void QuadratureConfig::validate() const {
  std::ostringstream msg;
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) msg << "tolerances must be positive";
  else if (!(cutoff > 0.0)) msg << "cutoff must be positive";
  else if (max_subdivisions < 1) msg << "max_subdivisions must be at least 1";
  else if (!(gaussian_envelope(cutoff) < abs_tol))
    msg << "cutoff " << cutoff << " leaves a tail envelope " << gaussian_envelope(cutoff)
        << " above abs_tol " << abs_tol;
  else return;
  throw Error(ErrorCode::InvalidConfig, msg.str());
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig out = *this;
  out.abs_tol /= factor;
  out.rel_tol /= factor;
  return out;
}

QuadratureConfig QuadratureConfig::relaxed(double factor) const {
  QuadratureConfig out = *this;
  out.abs_tol *= factor;
  out.rel_tol *= factor;
  return out;
}

QuadratureResult integrate_partition(const RealToComplex& f, std::span<const double> points,
                                     const QuadratureConfig& cfg) {
  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  Complex total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Interval piece = gk21(f, points[i], points[i + 1]);
    total += piece.value;
    total_err += piece.error;
    heap.push(piece);
  }
  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

  bool stuck = false;
  while (total_err > tolerance() && static_cast<int>(heap.size()) < cfg.max_subdivisions) {
    Interval worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 8.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      stuck = true;
      break;
    }
    heap.pop();
    Interval left = gk21(f, worst.a, mid);
    Interval right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  const bool met = total_err <= tolerance();

  // Re-sum from scratch; the running totals drift after many updates.
  QuadratureResult out;
  out.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
    heap.pop();
  }
  out.converged = !stuck && met;
  return out;
}

Complex integrate(const RealToComplex& f, double a, double b, const QuadratureConfig& cfg,
                  std::initializer_list<double> breakpoints) {
  if (!(a < b)) throw Error(ErrorCode::InvalidConfig, "integration bounds must satisfy a < b");
  const auto pts = merged_points(a, b, breakpoints);
  QuadratureResult r = integrate_partition(f, pts, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "error estimate " << r.error << " after " << r.intervals << " intervals on [" << a
        << ", " << b << "]";
    throw Error(ErrorCode::NonConvergence, msg.str());
  }
  return r.value;
}

Complex integrate_semi_infinite(const RealToComplex& f, const QuadratureConfig& cfg,
                                std::initializer_list<double> breakpoints) {
  std::vector<double> pts = merged_points(0.0, cfg.cutoff, breakpoints);
  if (cfg.cutoff > 1.0 && std::find(pts.begin(), pts.end(), 1.0) == pts.end()) {
    pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
  }
  QuadratureResult r = integrate_partition(f, pts, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "semi-infinite integral: error estimate " << r.error << " after " << r.intervals
        << " intervals";
    throw Error(ErrorCode::NonConvergence, msg.str());
  }
  return r.value;
}

Complex cauchy_pv(const RealToComplex& f, double pole, const QuadratureConfig& cfg,
                  std::initializer_list<double> breakpoints) {
  const double cut = cfg.cutoff;
  if (!(pole > 0.0) || !(pole < cut)) {
    std::ostringstream msg;
    msg << "pole " << pole << " outside (0, " << cut << ")";
    throw Error(ErrorCode::PoleOutOfRange, msg.str());
  }
  const Complex f_pole = f(pole);
  const double h = std::min(1e-6 * std::max(1.0, pole), 0.5 * pole);
  const double fill_radius = 1e-12 * std::max(1.0, pole);
  std::optional<Complex> slope;

  auto subtracted = [&](double t) -> Complex {
    const double d = t - pole;
    if (std::abs(d) <= fill_radius) {
      if (!slope) slope = (f(pole + h) - f(pole - h)) / (2.0 * h);
      return *slope;
    }
    return (f(t) - f_pole) / d;
  };

  std::vector<double> pts = merged_points(0.0, cut, breakpoints);
  for (double extra : {1.0, pole})
    if (extra > 0.0 && extra < cut) pts.push_back(extra);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  QuadratureResult r = integrate_partition(subtracted, pts, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "principal value at pole " << pole << ": error estimate " << r.error << " after "
        << r.intervals << " intervals";
    throw Error(ErrorCode::NonConvergence, msg.str());
  }
  return r.value + f_pole * std::log((cut - pole) / pole);
}

}  // namespace bgk
