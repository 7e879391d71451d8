// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSeriesTerms = 1'000'000;

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

double gauss_sum_at_one(double a, double b, double c) {
  // 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
  const double s = c - a - b;
  if (!(s > 0.0)) {
    throw DomainError("hyp2f1: series diverges at z = 1 unless c - a - b > 0");
  }
  // Gamma(c - a) or Gamma(c - b) at a pole makes the whole value vanish.
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) return 0.0;
  double sign = 1.0;
  auto lg = [&sign](double x) {
    int sg = 1;
    const double v = ::lgamma_r(x, &sg);
    sign *= sg;
    return v;
  };
  const double num = lg(c) + lg(s);
  const double sign_num = sign;
  sign = 1.0;
  const double den = lg(c - a) + lg(c - b);
  return sign_num * sign * std::exp(num - den);
}

} // namespace

double hyp2f1_neg_int(int k, double rho) {
  if (k < 0) throw DomainError("hyp2f1_neg_int: k must be >= 0");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("hyp2f1_neg_int: rho must lie in [0, 1], got " + std::to_string(rho));
  }
  // binom(k, m) is built by the exact integer recurrence binom * (k - m) / (m + 1).
  double binom = 1.0;
  double power = 1.0;
  double sum = 1.0;
  for (int m = 0; m < k; ++m) {
    binom = binom * (k - m) / (m + 1);
    power *= rho;
    sum += binom * binom * power;
  }
  return sum;
}

double hyp2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("hyp2f1: arguments must be finite");
  }
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("hyp2f1: z must lie in [0, 1]");
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c must not be a non-positive integer");

  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (z == 1.0 && !terminates) return gauss_sum_at_one(a, b, c);

  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;
  int quiet = 0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z;
    if (term == 0.0) return sum + comp;
    // Neumaier summation: slow tails near z = 1 accumulate many small terms.
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (std::abs(term) < kEps * 0.5 * std::abs(sum)) {
      if (++quiet >= 2) return sum + comp;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge");
}

double hyp2f1_cross_derivative(int a, int b, double rho) {
  if (a < 0 || b < 0) throw DomainError("hyp2f1_cross_derivative: a and b must be >= 0");
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw DomainError("hyp2f1_cross_derivative: rho must lie in [0, 1)");
  }
  // d/da [Gamma(a+1)/Gamma(a-m+1)] = a!/(a-m)! * (psi(a+1) - psi(a-m+1))
  auto factor = [](int n, int m) {
    double falling = 1.0;
    for (int j = 0; j < m; ++j) falling *= (n - j);
    return falling * (digamma(n + 1.0) - digamma(n - m + 1.0));
  };
  double sum = 0.0;
  double weight = 1.0; // rho^m / (m!)^2
  for (int m = 0; m <= std::min(a, b); ++m) {
    if (m > 0) weight *= rho / (static_cast<double>(m) * m);
    sum += factor(a, m) * factor(b, m) * weight;
  }
  return sum;
}

} // namespace bscap::special
