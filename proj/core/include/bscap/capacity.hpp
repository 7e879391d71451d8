// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bscap/accuracy.hpp"
#include "bscap/channel_model.hpp"

/// Ergodic capacity E{log2(1 + gamma)} of the correlated product channel, in bps/Hz.
namespace bscap::capacity {

enum class Method {
  quadrature,
  series,
  asymptotic_high,
  asymptotic_low,
  awgn_reference,
  rayleigh_reference,
  monte_carlo,
};

std::string_view to_string(Method method);

/// Method-specific metadata; absent fields do not apply to the method.
struct Diagnostics {
  std::optional<int> nodes;
  std::optional<int> levels;
  std::optional<int> terms;
  std::optional<double> tail_bound;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> batches;

  /// "key=value;key=value" in a fixed key order; empty when nothing is set.
  std::string to_string() const;
};

struct CapacityEstimate {
  double value = 0.0;
  Method method = Method::quadrature;
  /// Numerical error estimate (or Monte Carlo standard error). NaN marks an
  /// asymptotic expression with no remainder bound.
  double error_bound = 0.0;
  Diagnostics diagnostics;

  bool is_asymptotic() const;
};

/// int_0^inf log2(1 + gamma) f(gamma) dgamma by double-exponential quadrature in
/// u = a sqrt(gamma) with the scaled-Bessel integrand. Throws UnsupportedError at
/// rho = 1 and ConvergenceError when the node budget runs out.
CapacityEstimate capacity_quadrature(const channel::ChannelParams& params,
                                     const AccuracyPolicy& policy = {});

inline constexpr int kDefaultSeriesTerms = 500;

/// Weight C_k of the k-th Meijer-G kernel, as a natural log:
///   C_k = (1/2) (b/2)^{2k} / (k!)^2.
double series_log_weight(double b, int k);

/// Parameters of the k-th capacity kernel
///   G^{4,1}_{2,4}[a^2/4 | -k-1, -k ; 0, 0, -k-1, -k-1],
/// the unit-coefficient form of the Fox H-function
///   H^{4,1}_{2,4}[a^2/4 | (-k-1,1), (-k,1) ; (0,1), (0,1), (-k-1,1), (-k-1,1)].
/// Its pole-free strip is (k+1, k+2) and the contour runs at Re(s) = k + 3/2.
std::vector<double> series_kernel_upper(int k);
std::vector<double> series_kernel_lower(int k);
double series_kernel_abscissa(int k);

/// c1 * sum_k C_k G_k(a^2/4), stopping after two consecutive terms fall below
/// rel_tol times the running sum. At rho = 0 only k = 0 contributes. Throws
/// ConvergenceError (recommending quadrature) if max_terms is reached first.
CapacityEstimate capacity_series(const channel::ChannelParams& params,
                                 const AccuracyPolicy& policy = {},
                                 int max_terms = kDefaultSeriesTerms);

/// High-SNR asymptote log2(mean) - 2 log2(e) gamma_e - log2(1 + rho); valid at rho = 1.
CapacityEstimate capacity_high_snr(const channel::ChannelParams& params);

/// Fixed-budget high-SNR asymptote log2(snr_I) - 2 log2(e) gamma_e, independent of rho.
CapacityEstimate capacity_high_snr_budget(double snr_i_linear);

/// Low-SNR first-moment approximation log2(e) E{gamma}, i.e. log2(e) snr_I (1 + rho)
/// at a fixed budget and log2(e) mean at a fixed receiver SNR.
CapacityEstimate capacity_low_snr(const channel::Parameterization& param);

/// log2(1 + snr).
CapacityEstimate capacity_awgn(double snr_linear);

/// Single-link Rayleigh capacity log2(e) e^{1/snr} E1(1/snr).
CapacityEstimate capacity_rayleigh(double snr_linear);

struct CrossoverPoint {
  double snr_db;
  double quadrature;
  double asymptote;
  double gap; ///< |quadrature - asymptote|
};

struct CrossoverReport {
  double rho;
  std::vector<CrossoverPoint> points;
  /// Gap strictly decreasing over all grid points at or above 20 dB.
  bool monotone_above_20db;
};

/// Tightness of the high-SNR asymptote against quadrature over a receiver-SNR grid.
CrossoverReport asymptote_crossover_check(double rho, const std::vector<double>& snr_db_grid,
                                          const AccuracyPolicy& policy = {});

} // namespace bscap::capacity
