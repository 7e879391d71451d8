// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bscap/accuracy.hpp"

/// Correlated Rayleigh product channel of a backscatter link: the instantaneous SNR
/// at the reader is gamma = snr_I * g_f * g_b with unit-mean exponential power gains
/// whose Pearson correlation is rho. Its mean is E{gamma} = snr_I (1 + rho).
namespace bscap::channel {

double db_to_linear(double db);
double linear_to_db(double linear);

/// Transmit power, aggregate loss and receiver noise of the link.
struct LinkBudget {
  double transmit_power_w = 1.0;
  double aggregate_loss = 1.0; ///< linear gain in (0, 1]
  double noise_power_w = 1.0;

  /// Noise referred to the transmitter output, N0 / L_t.
  double equivalent_noise_w() const;
  void validate() const;
};

/// snr_I = P_T L_t / N0 = P_T / N_E.
double budget_to_snr(const LinkBudget& budget);

/// Product-channel parameters for a receiver mean SNR and a power correlation.
///
/// Derived constants of the density
///   f(gamma) = (2/mean)((1+rho)/(1-rho)) I0(b sqrt(gamma)) K0(a sqrt(gamma)):
///   a  = 2/(1-rho) sqrt((1+rho)/mean),  b = a sqrt(rho),  c1 = a^2 (1-rho) / (2 ln 2).
/// At rho = 1 they diverge; the object is still valid but analytic_supported() is false.
class ChannelParams {
public:
  /// Throws DomainError for mean_snr <= 0 (or non-finite) and rho outside [0, 1].
  ChannelParams(double mean_snr, double rho);

  double mean_snr() const noexcept { return mean_snr_; }
  double rho() const noexcept { return rho_; }
  bool analytic_supported() const noexcept { return rho_ < 1.0; }

  /// Kernel constants; throw UnsupportedError at rho = 1.
  double a() const;
  double b() const;
  double c1() const;

private:
  double mean_snr_;
  double rho_;
  double a_ = 0.0;
  double b_ = 0.0;
  double c1_ = 0.0;
};

ChannelParams params_from_receiver_snr(double snr_db, double rho);

/// Fixed power budget: the receiver mean becomes snr_I (1 + rho).
ChannelParams params_from_power_budget(double snr_i_db, double rho);

enum class SnrMode { fixed_receiver_snr, fixed_power_budget };

std::string_view to_string(SnrMode mode);
SnrMode snr_mode_from_string(std::string_view text);

/// How a nominal SNR value maps onto the channel: receiver mean in the first mode,
/// transmit-referred snr_I in the second.
struct Parameterization {
  SnrMode mode = SnrMode::fixed_receiver_snr;
  double snr_linear = 1.0;
  double rho = 0.0;

  double receiver_mean_snr() const;
  ChannelParams channel() const;
  void validate() const;
};

/// Density of gamma. Evaluated through the scaled Bessel functions so it is finite for
/// every gamma > 0 and every mean SNR. Returns 0 for gamma < 0 and +inf at the
/// logarithmic singularity gamma = 0. Throws DomainError for NaN and
/// UnsupportedError at rho = 1 (use the Monte Carlo path there).
double pdf(const ChannelParams& params, double gamma);

/// P(gamma_i <= gamma). Accepts +inf (returns 1).
double cdf(const ChannelParams& params, double gamma, const AccuracyPolicy& policy = {});

/// CDF at each of a non-decreasing sequence of points, integrating panel by panel
/// between consecutive points. Much cheaper than repeated cdf() calls for large samples.
std::vector<double> cdf_sorted(const ChannelParams& params, std::span<const double> sorted,
                               const AccuracyPolicy& policy = {});

/// Normalized moment M(k) = E{gamma^k} / mean^k
///   = (1+rho)^{-k} Gamma(1+k)^2 2F1(-k, -k; 1; rho),
/// defined for real k > -1/2 (the range where the moment is finite for every rho).
double normalized_moment(double rho, double k);

/// E{gamma^k} for k >= 0. Throws DomainError for k < 0.
double moment(const ChannelParams& params, double k);

/// dM/dk at k = 0, the offset of the high-SNR capacity: -2 gamma_e - ln(1 + rho).
double moment_log_derivative(double rho);

/// Integrand of the normalized-density integrals in the variable u = a sqrt(gamma):
///   f(gamma) dgamma = (1 - rho) u I0(sqrt(rho) u) K0(u) du.
/// Finite for every u > 0; zero once the exponential envelope underflows.
double density_in_u(double rho, double u);

} // namespace bscap::channel
