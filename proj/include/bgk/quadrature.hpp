#pragma once

#include <complex>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace bgk {

using Complex = std::complex<double>;

/// Tolerances and truncation point shared by every integral in the library.
///
/// All integrals over [0, inf) in this library have integrands bounded by a
/// multiple of sqrt(pi) t exp(-t^2), so they are truncated at `cutoff`; the
/// envelope beyond the cutoff must sit below `abs_tol`.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double cutoff = 7.0;
  int max_subdivisions = 200;

  /// Throws Error(InvalidConfig) when any invariant is violated.
  void validate() const;

  /// Same cutoff, tolerances divided by `factor`.
  QuadratureConfig tightened(double factor) const;
  /// Same cutoff, tolerances multiplied by `factor`.
  QuadratureConfig relaxed(double factor) const;
};

/// sqrt(pi) T exp(-T^2): the Gaussian-decay envelope at the cutoff.
double gaussian_envelope(double cutoff);

struct QuadratureResult {
  Complex value;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

using RealToComplex = std::function<Complex(double)>;

/// Globally adaptive Gauss-Kronrod (10, 21) quadrature over the partition
/// `points` (sorted, at least two entries). Bisects the interval with the
/// largest error estimate until the total estimate drops below
/// max(abs_tol, rel_tol |I|) or `max_subdivisions` intervals exist. Never
/// throws on non-convergence; inspect `converged`.
QuadratureResult integrate_partition(const RealToComplex& f, std::span<const double> points,
                                     const QuadratureConfig& cfg);

/// Integral of f over [a, b]; `breakpoints` strictly inside (a, b) seed the
/// initial partition. Throws NonConvergence.
Complex integrate(const RealToComplex& f, double a, double b, const QuadratureConfig& cfg,
                  std::initializer_list<double> breakpoints = {});

/// Integral of f over [0, inf), truncated at cfg.cutoff. For |f(t)| <= C t exp(-t^2)
/// beyond the cutoff the truncation error is at most C exp(-T^2) / 2. The range
/// is split at t = 1 (and at `breakpoints`) so that adaptivity near the origin
/// is not starved by the long tail.
Complex integrate_semi_infinite(const RealToComplex& f, const QuadratureConfig& cfg,
                                std::initializer_list<double> breakpoints = {});

/// Principal value of the integral of f(t) / (t - pole) over [0, inf), truncated at
/// cfg.cutoff, by singularity subtraction:
///   int_0^T [f(t) - f(pole)] / (t - pole) dt + f(pole) ln((T - pole) / pole).
/// The subtracted integrand takes the value f'(pole) (central difference with
/// step 1e-6 max(1, pole)) at the pole itself.
/// Throws PoleOutOfRange unless 0 < pole < cutoff.
Complex cauchy_pv(const RealToComplex& f, double pole, const QuadratureConfig& cfg,
                  std::initializer_list<double> breakpoints = {});

}  // namespace bgk
