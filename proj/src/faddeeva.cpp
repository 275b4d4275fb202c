#include "bgk/faddeeva.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace bgk {

namespace {

constexpr int kTerms = 40;

struct WeidemanTable {
  double scale;                        // L = sqrt(N / sqrt(2))
  std::array<double, kTerms> coeff;    // polynomial coefficients, lowest degree first
};

// Coefficients are the Fourier coefficients of exp(-t^2)(L^2 + t^2) sampled on
// t = L tan(theta / 2); a plain DFT is fast enough for a one-time table.
WeidemanTable build_table() {
  WeidemanTable table{};
  const int m = 2 * kTerms;
  const int len = 2 * m;
  const double L = std::sqrt(kTerms / std::numbers::sqrt2);
  table.scale = L;

  std::vector<double> samples(len, 0.0);
  // samples[0] = 0; samples[1..len-1] hold k = -m+1 .. m-1, then fftshift.
  std::vector<double> raw(len, 0.0);
  for (int k = -m + 1; k <= m - 1; ++k) {
    const double t = L * std::tan(0.5 * k * std::numbers::pi / m);
    raw[k + m] = std::exp(-t * t) * (L * L + t * t);
  }
  for (int j = 0; j < len; ++j) samples[j] = raw[(j + m) % len];

  for (int n = 1; n <= kTerms; ++n) {
    double re = 0.0;
    for (int j = 0; j < len; ++j) re += samples[j] * std::cos(2.0 * std::numbers::pi * j * n / len);
    table.coeff[n - 1] = re / len;
  }
  return table;
}

const WeidemanTable& table() {
  static const WeidemanTable t = build_table();
  return t;
}

}  // namespace

std::complex<double> faddeeva_upper(std::complex<double> z) {
  using namespace std::complex_literals;
  const auto& t = table();
  const std::complex<double> denom = t.scale - 1i * z;
  const std::complex<double> zz = (t.scale + 1i * z) / denom;
  std::complex<double> p = t.coeff[kTerms - 1];
  for (int n = kTerms - 2; n >= 0; --n) p = p * zz + t.coeff[n];
  return 2.0 * p / (denom * denom) + std::numbers::inv_sqrtpi / denom;
}

}  // namespace bgk
