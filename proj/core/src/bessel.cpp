// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this the power series for I0 is summed directly; above it the Hankel
// asymptotic series reaches full double precision (smallest term ~ e^{-2x}).
constexpr double kI0AsymptoticFrom = 20.0;

// K0 switches from the logarithmic power series to Steed's continued fraction.
constexpr double kK0ContinuedFractionFrom = 2.0;

// sum_{k>=0} (x^2/4)^k / (k!)^2
double i0_power_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < kEps * 0.25 * sum) break;
  }
  return sum;
}

// e^{-x} I0(x) ~ (2 pi x)^{-1/2} sum_k [(2k-1)!!]^2 / (k! 8^k x^k)
double i0_scaled_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < kEps * 0.25 * sum) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// K0(x) = -(ln(x/2) + gamma_e) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k
double k0_power_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double harmonic = 0.0;
  double i0 = 1.0;
  double tail = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < kEps * 0.25 * std::abs(tail)) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
}

// Steed's evaluation of the second continued fraction (Temme), order zero.
// Returns e^{x} K0(x); valid and fast for x >= 2.
double k0_scaled_continued_fraction(double x) {
  constexpr double a1 = 0.25;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double h = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps * 0.5) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) / s;
}

} // namespace

double bessel_i0_scaled(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("bessel_i0_scaled: argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
  if (x < kI0AsymptoticFrom) return std::exp(-x) * i0_power_series(x);
  return i0_scaled_asymptotic(x);
}

double bessel_k0_scaled(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("bessel_k0_scaled: argument must be > 0, got " + std::to_string(x));
  }
  if (std::isinf(x)) return 0.0;
  if (x < kK0ContinuedFractionFrom) return std::exp(x) * k0_power_series(x);
  return k0_scaled_continued_fraction(x);
}

double bessel_i0(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("bessel_i0: argument must be finite and >= 0");
  }
  if (x < kI0AsymptoticFrom) return i0_power_series(x);
  return i0_scaled_asymptotic(x) * std::exp(x);
}

double bessel_k0(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("bessel_k0: argument must be > 0");
  }
  if (std::isinf(x)) return 0.0;
  if (x < kK0ContinuedFractionFrom) return k0_power_series(x);
  return k0_scaled_continued_fraction(x) * std::exp(-x);
}

} // namespace bscap::special
