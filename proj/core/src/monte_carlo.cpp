// SPDX-License-Identifier: Apache-2.0
#include "bscap/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <thread>

#include "bscap/errors.hpp"

namespace bscap::mc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

std::uint64_t batch_size(const McConfig& config, int batch) {
  const std::uint64_t base = config.n_samples / config.n_batches;
  const std::uint64_t extra = config.n_samples % config.n_batches;
  return base + (static_cast<std::uint64_t>(batch) < extra ? 1 : 0);
}

int resolve_threads(const McConfig& config) {
  int t = config.threads;
  if (t <= 0) t = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::min(t, config.n_batches);
}

// Runs fn(batch) for every batch; fn writes only to its own batch slot.
template <class Fn>
void for_each_batch(const McConfig& config, Fn&& fn) {
  const int threads = resolve_threads(config);
  if (threads <= 1) {
    for (int b = 0; b < config.n_batches; ++b) fn(b);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int b = next.fetch_add(1); b < config.n_batches; b = next.fetch_add(1)) fn(b);
    });
  }
  for (auto& th : pool) th.join();
}

// Per-batch sums of `stats` per-sample statistics, reduced in batch order.
template <class Stat>
std::vector<McResult> run(const channel::Parameterization& param, const McConfig& config,
                          int stats, Stat&& stat) {
  config.validate();
  param.validate();
  std::vector<std::vector<double>> sums(config.n_batches, std::vector<double>(stats, 0.0));
  for_each_batch(config, [&](int b) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(b));
    std::vector<Neumaier> acc(stats);
    std::vector<double> values(stats);
    const std::uint64_t n = batch_size(config, b);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double gamma = snr_from_pair(param, sample_pair(rng, param.rho));
      stat(gamma, values.data());
      for (int s = 0; s < stats; ++s) acc[s].add(values[s]);
    }
    for (int s = 0; s < stats; ++s) sums[b][s] = acc[s].value();
  });

  std::vector<McResult> out(stats);
  const double batches = config.n_batches;
  for (int s = 0; s < stats; ++s) {
    McResult& r = out[s];
    r.n_samples = config.n_samples;
    r.seed = config.seed;
    r.n_batches = config.n_batches;
    Neumaier total;
    for (int b = 0; b < config.n_batches; ++b) {
      total.add(sums[b][s]);
      r.batch_estimates.push_back(sums[b][s] / static_cast<double>(batch_size(config, b)));
    }
    r.estimate = total.value() / static_cast<double>(config.n_samples);
    Neumaier mean_of_means;
    for (double m : r.batch_estimates) mean_of_means.add(m);
    const double mbar = mean_of_means.value() / batches;
    Neumaier ss;
    for (double m : r.batch_estimates) ss.add((m - mbar) * (m - mbar));
    r.std_error = std::sqrt(ss.value() / (batches * (batches - 1.0)));
  }
  return out;
}

} // namespace

void McConfig::validate() const {
  if (n_batches < 2) throw ConfigError("McConfig: n_batches must be >= 2");
  if (n_samples < static_cast<std::uint64_t>(n_batches)) {
    throw ConfigError("McConfig: n_samples must be >= n_batches");
  }
  if (n_samples / static_cast<std::uint64_t>(n_batches) < 100) {
    throw ConfigError("McConfig: need at least 100 samples per batch (n_samples / n_batches = " +
                      std::to_string(n_samples / n_batches) + ")");
  }
  if (threads < 0) throw ConfigError("McConfig: threads must be >= 0");
}

FadingPairSample sample_pair(CounterRng& rng, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("sample_pair: rho must lie in [0, 1], got " + std::to_string(rho));
  }
  // Circular complex Gaussian of unit power: sqrt(E) e^{i theta}, E ~ Exp(1).
  auto gaussian = [&rng] {
    const double power = -std::log(rng.next_u01());
    const double phase = kTwoPi * rng.next_u01();
    return std::polar(std::sqrt(power), phase);
  };
  const std::complex<double> u1 = gaussian();
  const std::complex<double> u2 = gaussian();
  const std::complex<double> hb = std::sqrt(rho) * u1 + std::sqrt(1.0 - rho) * u2;
  return FadingPairSample{std::norm(u1), std::norm(hb)};
}

double snr_from_pair(const channel::Parameterization& param, const FadingPairSample& pair) {
  const double product = pair.g_f * pair.g_b;
  if (param.mode == channel::SnrMode::fixed_power_budget) return param.snr_linear * product;
  return param.snr_linear * product / (1.0 + param.rho);
}

McResult estimate_capacity(const channel::Parameterization& param, const McConfig& config) {
  auto stat = [](double gamma, double* out) { out[0] = std::log2(1.0 + gamma); };
  return run(param, config, 1, stat).front();
}

std::vector<McResult> estimate_moments(const channel::Parameterization& param,
                                       std::span<const int> orders, const McConfig& config) {
  for (int k : orders) {
    if (k < 1 || k > 4) throw DomainError("estimate_moment: order must be in {1, 2, 3, 4}");
  }
  std::vector<int> ks(orders.begin(), orders.end());
  auto stat = [&ks](double gamma, double* out) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      double v = gamma;
      for (int j = 1; j < ks[i]; ++j) v *= gamma;
      out[i] = v;
    }
  };
  return run(param, config, static_cast<int>(ks.size()), stat);
}

McResult estimate_moment(const channel::Parameterization& param, int k, const McConfig& config) {
  const int orders[] = {k};
  return estimate_moments(param, orders, config).front();
}

std::vector<double> sample_snr(const channel::Parameterization& param, const McConfig& config) {
  config.validate();
  param.validate();
  std::vector<double> out(config.n_samples);
  std::vector<std::uint64_t> offset(config.n_batches + 1, 0);
  for (int b = 0; b < config.n_batches; ++b) offset[b + 1] = offset[b] + batch_size(config, b);
  for_each_batch(config, [&](int b) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(b));
    for (std::uint64_t i = offset[b]; i < offset[b + 1]; ++i) {
      out[i] = snr_from_pair(param, sample_pair(rng, param.rho));
    }
  });
  return out;
}

KsResult ks_from_sorted_cdf(std::span<const double> cdf_values) {
  KsResult r;
  r.n = cdf_values.size();
  if (r.n == 0) throw DomainError("ks: no samples");
  const double n = static_cast<double>(r.n);
  double d = 0.0;
  for (std::size_t i = 0; i < cdf_values.size(); ++i) {
    const double f = cdf_values[i];
    d = std::max({d, (i + 1.0) / n - f, f - i / n});
  }
  r.statistic = d;
  r.critical_value = kKsCritical01 / std::sqrt(n);
  r.pass = d < r.critical_value;
  return r;
}

KsResult ks_test_samples(std::vector<double> samples, const channel::ChannelParams& params,
                         const AccuracyPolicy& policy) {
  std::sort(samples.begin(), samples.end());
  const auto cdf = channel::cdf_sorted(params, samples, policy);
  return ks_from_sorted_cdf(cdf);
}

KsResult ks_test(const channel::Parameterization& param, const McConfig& config,
                 const AccuracyPolicy& policy) {
  const auto params = param.channel();
  if (!params.analytic_supported()) {
    throw UnsupportedError("ks_test: rho = 1 has no analytic CDF");
  }
  return ks_test_samples(sample_snr(param, config), params, policy);
}

MarginalKs ks_test_marginals(double rho, const McConfig& config) {
  config.validate();
  std::vector<double> forward;
  std::vector<double> backward;
  forward.reserve(config.n_samples);
  backward.reserve(config.n_samples);
  for (int b = 0; b < config.n_batches; ++b) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(b));
    const std::uint64_t n = batch_size(config, b);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto pair = sample_pair(rng, rho);
      forward.push_back(pair.g_f);
      backward.push_back(pair.g_b);
    }
  }
  auto test = [](std::vector<double>& xs) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> cdf(xs.size());
    std::transform(xs.begin(), xs.end(), cdf.begin(), [](double x) { return -std::expm1(-x); });
    return ks_from_sorted_cdf(cdf);
  };
  return MarginalKs{test(forward), test(backward)};
}

} // namespace bscap::mc
