// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "bscap/accuracy.hpp"

namespace bscap::special {

/// Parameters of the Meijer G-function G^{m,n}_{p,q}[z | a_1..a_p ; b_1..b_q] with real
/// parameters and a positive real argument. p and q are the list lengths.
struct GParams {
  int m = 0;
  int n = 0;
  std::vector<double> a;
  std::vector<double> b;
  double z = 1.0;

  int p() const noexcept { return static_cast<int>(a.size()); }
  int q() const noexcept { return static_cast<int>(b.size()); }
};

/// Open interval of admissible contour abscissae: every pole of Gamma(b_j + s), j <= m,
/// lies to its left and every pole of Gamma(1 - a_j - s), j <= n, to its right.
struct ContourStrip {
  double left;  ///< max_{j<=m} (-b_j), or -inf
  double right; ///< min_{j<=n} (1 - a_j), or +inf
};

/// Validates counts, finiteness, z > 0, strip feasibility and exponential decay of
/// the integrand along vertical lines. Throws ParameterError.
ContourStrip contour_strip(const GParams& params);

/// Default abscissa: strip midpoint, or one unit inside a half-infinite strip.
double default_abscissa(const ContourStrip& strip);

/// Value represented as mantissa * exp(log_scale) so very large or very small
/// G values can be combined with other log-scale factors before exponentiation.
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;
  double value() const;
};

struct MeijerResult {
  double value = 0.0;          ///< G value (may be +-inf/0 if it leaves double range)
  ScaledValue scaled;          ///< same value, overflow-free
  double error_estimate = 0.0; ///< absolute, in units of value: refinement change + tail bound
  double abscissa = 0.0;       ///< Re(s) of the contour used
  double truncation = 0.0;     ///< contour truncated to |Im s| <= truncation
  double tail_bound = 0.0;     ///< absolute bound on the discarded tails
  double relative_error = 0.0; ///< error_estimate / |value|, computed in scaled form
  int nodes = 0;               ///< integrand evaluations
};

/// Meijer G-function by trapezoidal quadrature of its Mellin-Barnes integral
///
///   (1/2 pi i) int_{c - i inf}^{c + i inf}
///       prod_{j<=m} Gamma(b_j + s) prod_{j<=n} Gamma(1 - a_j - s)
///     / [prod_{j>m} Gamma(1 - b_j - s) prod_{j>n} Gamma(a_j + s)] z^{-s} ds
///
/// along Re(s) = c. The integrand is analytic in the pole-free strip, so the
/// trapezoid error decays like exp(-2 pi w / h) with w the distance from c to the
/// nearest pole; the step is halved until two levels agree to policy.rel_tol.
/// The line is truncated where the integrand has decayed by rel_tol * abs_tol *
/// exp(-margin) relative to its peak, using the exp(-pi kappa |t|) envelope,
/// kappa = m + n - (p + q)/2 > 0.
///
/// Throws ParameterError (no feasible contour, non-decaying integrand) and
/// ConvergenceError (node budget exhausted).
MeijerResult meijer_g(const GParams& params, const AccuracyPolicy& policy = {},
                      std::optional<double> abscissa = std::nullopt);

/// Log of the Mellin-Barnes integrand at s (without the 1/(2 pi i) factor).
/// Returns nullopt where a denominator gamma has a pole (integrand is zero).
std::optional<std::complex<double>> meijer_g_log_integrand(const GParams& params,
                                                           std::complex<double> s);

} // namespace bscap::special
