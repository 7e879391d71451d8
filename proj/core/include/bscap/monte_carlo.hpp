// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bscap/accuracy.hpp"
#include "bscap/channel_model.hpp"
#include "bscap/philox.hpp"

/// Seedable Monte Carlo oracle for the correlated product channel.
///
/// Results depend only on (seed, n_samples, n_batches, parameters): batch b draws
/// from Philox substream (seed, b) and batch sums are combined in index order, so
/// any thread count gives bit-identical output.
namespace bscap::mc {

struct McConfig {
  std::uint64_t n_samples = 100'000;
  std::uint64_t seed = 20200301;
  int n_batches = 100;
  /// Worker threads; 0 picks the hardware concurrency. Never changes results.
  int threads = 0;

  /// n_samples >= n_batches and at least 100 samples per batch; throws ConfigError.
  void validate() const;
};

/// Forward and backward link power gains |h_f|^2, |h_b|^2.
struct FadingPairSample {
  double g_f;
  double g_b;
};

struct McResult {
  double estimate = 0.0;
  double std_error = 0.0; ///< batch-means standard error
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  int n_batches = 0;
  std::vector<double> batch_estimates;
};

/// h_f = u1, h_b = sqrt(rho) u1 + sqrt(1 - rho) u2 with independent unit-power
/// circular complex Gaussians u1, u2. The power gains are unit-mean exponentials
/// with Pearson correlation rho and E{g_f g_b} = 1 + rho. Consumes four uniforms.
FadingPairSample sample_pair(CounterRng& rng, double rho);

/// SNR draw for a parameterization: snr_I g_f g_b at a fixed budget and
/// mean g_f g_b / (1 + rho) at a fixed receiver SNR (so E{gamma} = mean exactly).
double snr_from_pair(const channel::Parameterization& param, const FadingPairSample& pair);

/// Mean of log2(1 + gamma). Valid at rho = 1.
McResult estimate_capacity(const channel::Parameterization& param, const McConfig& config);

/// Mean of gamma^k for k in {1, 2, 3, 4}.
McResult estimate_moment(const channel::Parameterization& param, int k, const McConfig& config);

/// Several moments from one pass over the same samples.
std::vector<McResult> estimate_moments(const channel::Parameterization& param,
                                       std::span<const int> orders, const McConfig& config);

/// All n_samples SNR draws, batch after batch.
std::vector<double> sample_snr(const channel::Parameterization& param, const McConfig& config);

/// Asymptotic Kolmogorov 1% critical constant: reject when D >= c / sqrt(N).
inline constexpr double kKsCritical01 = 1.6276;

struct KsResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  std::uint64_t n = 0;
  bool pass = false;
};

/// KS statistic of samples against `cdf_values`, the reference CDF evaluated at the
/// ascending-sorted samples.
KsResult ks_from_sorted_cdf(std::span<const double> cdf_values);

/// KS test of raw samples (any order) against the product-SNR CDF of `params`.
KsResult ks_test_samples(std::vector<double> samples, const channel::ChannelParams& params,
                         const AccuracyPolicy& policy = {});

/// KS test of n_samples sampler draws against the analytic CDF. Requires rho < 1.
KsResult ks_test(const channel::Parameterization& param, const McConfig& config,
                 const AccuracyPolicy& policy = {});

/// KS tests of the forward and backward marginals against the unit exponential law.
struct MarginalKs {
  KsResult forward;
  KsResult backward;
};
MarginalKs ks_test_marginals(double rho, const McConfig& config);

} // namespace bscap::mc
