// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// E1(x) = -gamma_e - ln x - sum_{k>=1} (-x)^k / (k k!), used for x <= 1.
double e1_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) < kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// e^x E1(x) from the modified Lentz evaluation of the continued fraction
// 1/(x+1- 1/(x+3- 4/(x+5- ...))), used for x > 1.
double e1_scaled_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

void check(double x, const char* name) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError(std::string(name) + ": argument must be > 0, got " + std::to_string(x));
  }
}

} // namespace

double exp_integral_e1(double x) {
  check(x, "exp_integral_e1");
  if (std::isinf(x)) return 0.0;
  if (x <= 1.0) return e1_series(x);
  return e1_scaled_continued_fraction(x) * std::exp(-x);
}

double exp_integral_e1_scaled(double x) {
  check(x, "exp_integral_e1_scaled");
  if (std::isinf(x)) return 0.0;
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_scaled_continued_fraction(x);
}

} // namespace bscap::special
