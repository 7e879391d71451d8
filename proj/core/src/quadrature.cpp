// SPDX-License-Identifier: Apache-2.0
#include "bscap/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace bscap::quadrature {
namespace {

template <std::size_t N>
struct Rule {
  std::array<double, N> x{};
  std::array<double, N> w{};

  Rule() {
    // Newton iteration on P_N from the Chebyshev-like initial guesses.
    for (std::size_t i = 0; i < (N + 1) / 2; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        dp = N * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[N - 1 - i] = z;
      w[i] = w[N - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

} // namespace

GaussLegendre gauss_legendre_16() {
  static const Rule<16> rule;
  return GaussLegendre{rule.x, rule.w};
}

} // namespace bscap::quadrature
