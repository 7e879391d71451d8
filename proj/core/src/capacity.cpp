// SPDX-License-Identifier: Apache-2.0
#include "bscap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bscap/errors.hpp"
#include "bscap/meijer_g.hpp"
#include "bscap/quadrature.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::capacity {
namespace {

constexpr double kLog2e = std::numbers::log2e;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 2 log2(e) gamma_e: the high-SNR capacity offset of the uncorrelated product channel.
constexpr double kProductOffset = 2.0 * kLog2e * special::kEulerGamma;

CapacityEstimate asymptotic(double value, Method method) {
  CapacityEstimate e;
  e.value = value;
  e.method = method;
  e.error_bound = kNaN;
  return e;
}

CapacityEstimate exact(double value, Method method) {
  CapacityEstimate e;
  e.value = value;
  e.method = method;
  e.error_bound = 0.0;
  return e;
}

void check_snr(double snr, const char* who) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw DomainError(std::string(who) + ": SNR must be positive and finite");
  }
}

} // namespace

std::string_view to_string(Method method) {
  switch (method) {
  case Method::quadrature:
    return "quadrature";
  case Method::series:
    return "series";
  case Method::asymptotic_high:
    return "asymptotic_high";
  case Method::asymptotic_low:
    return "asymptotic_low";
  case Method::awgn_reference:
    return "awgn";
  case Method::rayleigh_reference:
    return "rayleigh";
  case Method::monte_carlo:
    return "mc";
  }
  return "?";
}

std::string Diagnostics::to_string() const {
  std::ostringstream out;
  out.precision(3);
  const char* sep = "";
  auto put = [&](const char* key, auto value) {
    out << sep << key << '=' << value;
    sep = ";";
  };
  if (nodes) put("nodes", *nodes);
  if (levels) put("levels", *levels);
  if (terms) put("terms", *terms);
  if (tail_bound) put("tail", *tail_bound);
  if (samples) put("samples", *samples);
  if (batches) put("batches", *batches);
  if (seed) put("seed", *seed);
  return out.str();
}

bool CapacityEstimate::is_asymptotic() const { return std::isnan(error_bound); }

CapacityEstimate capacity_quadrature(const channel::ChannelParams& params,
                                     const AccuracyPolicy& policy) {
  if (!params.analytic_supported()) {
    throw UnsupportedError(
        "capacity_quadrature: rho = 1 has no analytic density; use the Monte Carlo estimator");
  }
  const double rho = params.rho();
  const double inv_a = 1.0 / params.a();
  // gamma = (u / a)^2, so log2(1 + gamma) = log1p((u/a)^2) / ln 2.
  auto integrand = [rho, inv_a](double u) {
    const double d = channel::density_in_u(rho, u);
    if (d == 0.0) return 0.0;
    const double r = u * inv_a;
    return d * std::log1p(r * r) * kLog2e;
  };
  const double scale = 1.0 / (1.0 - std::sqrt(rho));
  const auto q = quadrature::integrate_half_line(integrand, 0.0, scale, policy);

  CapacityEstimate e;
  e.value = q.value;
  e.method = Method::quadrature;
  e.error_bound = q.error_estimate;
  e.diagnostics.nodes = q.nodes;
  e.diagnostics.levels = q.levels;
  return e;
}

double series_log_weight(double b, int k) {
  if (k == 0) return -std::numbers::ln2;
  return -std::numbers::ln2 + 2.0 * k * std::log(0.5 * b) - 2.0 * std::lgamma(k + 1.0);
}

std::vector<double> series_kernel_upper(int k) { return {-k - 1.0, -static_cast<double>(k)}; }

std::vector<double> series_kernel_lower(int k) { return {0.0, 0.0, -k - 1.0, -k - 1.0}; }

double series_kernel_abscissa(int k) { return k + 1.5; }

CapacityEstimate capacity_series(const channel::ChannelParams& params,
                                 const AccuracyPolicy& policy, int max_terms) {
  if (!params.analytic_supported()) {
    throw UnsupportedError("capacity_series: rho = 1 is outside the series' domain");
  }
  if (max_terms < 1) throw ConfigError("capacity_series: max_terms must be >= 1");

  const double a = params.a();
  const double b = params.b();
  const double log_c1 = std::log(params.c1());
  special::GParams kernel;
  kernel.m = 4;
  kernel.n = 1;
  kernel.z = 0.25 * a * a;

  double sum = 0.0;
  double abs_error = 0.0;
  double last = 0.0;
  double prev = 0.0;
  int quiet = 0;
  int nodes = 0;
  int terms = 0;
  bool done = false;
  for (int k = 0; k < max_terms; ++k) {
    kernel.a = series_kernel_upper(k);
    kernel.b = series_kernel_lower(k);
    const auto g = special::meijer_g(kernel, policy, series_kernel_abscissa(k));
    nodes += g.nodes;
    ++terms;
    const double log_mag = log_c1 + series_log_weight(b, k) + g.scaled.log_scale;
    const double term = g.scaled.mantissa * std::exp(log_mag);
    sum += term;
    abs_error += std::abs(term) * g.relative_error;
    prev = last;
    last = term;
    // b = 0 (rho = 0): every C_k with k >= 1 vanishes.
    if (b == 0.0) {
      done = true;
      break;
    }
    if (std::abs(term) < policy.rel_tol() * std::abs(sum)) {
      if (++quiet >= 2) {
        done = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  if (!done) {
    throw ConvergenceError("capacity_series: " + std::to_string(max_terms) +
                           " terms did not reach rel_tol (last term " + std::to_string(last) +
                           "); use capacity_quadrature for this point");
  }

  // Terms decay geometrically with ratio -> rho; bound the remainder accordingly.
  double tail = 0.0;
  if (b != 0.0) {
    double ratio = params.rho();
    if (prev != 0.0) ratio = std::max(ratio, std::abs(last / prev));
    ratio = std::min(ratio, 0.999);
    tail = std::abs(last) * ratio / (1.0 - ratio);
  }

  CapacityEstimate e;
  e.value = sum;
  e.method = Method::series;
  e.error_bound = abs_error + tail;
  e.diagnostics.terms = terms;
  e.diagnostics.nodes = nodes;
  e.diagnostics.tail_bound = std::abs(last);
  return e;
}

CapacityEstimate capacity_high_snr(const channel::ChannelParams& params) {
  return asymptotic(std::log2(params.mean_snr()) - kProductOffset - std::log2(1.0 + params.rho()),
                    Method::asymptotic_high);
}

CapacityEstimate capacity_high_snr_budget(double snr_i_linear) {
  check_snr(snr_i_linear, "capacity_high_snr_budget");
  return asymptotic(std::log2(snr_i_linear) - kProductOffset, Method::asymptotic_high);
}

CapacityEstimate capacity_low_snr(const channel::Parameterization& param) {
  return asymptotic(kLog2e * param.receiver_mean_snr(), Method::asymptotic_low);
}

CapacityEstimate capacity_awgn(double snr_linear) {
  check_snr(snr_linear, "capacity_awgn");
  return exact(std::log1p(snr_linear) * kLog2e, Method::awgn_reference);
}

CapacityEstimate capacity_rayleigh(double snr_linear) {
  check_snr(snr_linear, "capacity_rayleigh");
  return exact(kLog2e * special::exp_integral_e1_scaled(1.0 / snr_linear),
               Method::rayleigh_reference);
}

CrossoverReport asymptote_crossover_check(double rho, const std::vector<double>& snr_db_grid,
                                          const AccuracyPolicy& policy) {
  CrossoverReport report{rho, {}, true};
  for (double snr_db : snr_db_grid) {
    const auto params = channel::params_from_receiver_snr(snr_db, rho);
    const double q = capacity_quadrature(params, policy).value;
    const double h = capacity_high_snr(params).value;
    report.points.push_back({snr_db, q, h, std::abs(q - h)});
  }
  const CrossoverPoint* previous = nullptr;
  for (const auto& p : report.points) {
    if (p.snr_db < 20.0) continue;
    if (previous && !(p.gap < previous->gap)) report.monotone_above_20db = false;
    previous = &p;
  }
  return report;
}

} // namespace bscap::capacity
