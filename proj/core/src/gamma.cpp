// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::special {
namespace {

using cplx = std::complex<double>;

// B_{2j} / (2j (2j - 1)), j = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0,          -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0,        -3617.0 / 122400.0,
};

// |w| >= 12 with Re(w) > 0 keeps the first omitted Stirling term below 1e-19.
constexpr double kStirlingRadius = 12.0;

cplx stirling(cplx w) {
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  series *= inv;
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

} // namespace

cplx ln_gamma_complex(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ln_gamma_complex: argument must be finite");
  }
  if (is_pole(z)) {
    throw PoleError("ln_gamma_complex: pole of Gamma at z = " + std::to_string(z.real()));
  }
  // Upward recurrence Gamma(z) = Gamma(z + n) / prod_{j<n} (z + j). Each principal
  // log(z + j) is analytic in the open upper and lower half planes, so the result is
  // continuous off the negative real axis; crossing it with Re z < 0 shifts the
  // imaginary part by a multiple of 2*pi, which leaves exp(lnGamma) unchanged.
  cplx shift = 0.0;
  cplx w = z;
  while (w.real() < 0.5 || std::abs(w) < kStirlingRadius) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: argument must be finite");
  if (x <= 0.0) {
    if (x == std::floor(x)) throw PoleError("digamma: pole at x = " + std::to_string(x));
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // ln x - 1/(2x) - sum_j B_{2j} / (2j x^{2j})
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return acc + std::log(x) - 0.5 / x - series;
}

} // namespace bscap::special
