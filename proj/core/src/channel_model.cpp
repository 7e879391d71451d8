// SPDX-License-Identifier: Apache-2.0
#include "bscap/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/quadrature.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::channel {
namespace {

// exp() underflows to zero below this.
constexpr double kMinExponent = -745.0;

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("rho must lie in [0, 1], got " + std::to_string(rho));
  }
}

void require_analytic(const ChannelParams& p, const char* who) {
  if (!p.analytic_supported()) {
    throw UnsupportedError(std::string(who) +
                           ": rho = 1 has no analytic density; use the Monte Carlo estimator");
  }
}

// Bulk of the density in u sits below ~1/(1 - sqrt(rho)), the decay length of
// exp(-(1 - sqrt(rho)) u).
double bulk_scale(double rho) { return 1.0 / (1.0 - std::sqrt(rho)); }

double cdf_in_u(double rho, double u, const AccuracyPolicy& policy) {
  if (u <= 0.0) return 0.0;
  if (std::isinf(u)) return 1.0;
  const double scale = bulk_scale(rho);
  if (u <= scale) {
    auto f = [rho](double, double from_zero, double) { return density_in_u(rho, from_zero); };
    return std::min(1.0, quadrature::integrate_interval(f, 0.0, u, policy).value);
  }
  auto f = [rho](double x) { return density_in_u(rho, x); };
  const double tail = quadrature::integrate_half_line(f, u, scale, policy).value;
  return std::clamp(1.0 - tail, 0.0, 1.0);
}

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double LinkBudget::equivalent_noise_w() const {
  validate();
  return noise_power_w / aggregate_loss;
}

void LinkBudget::validate() const {
  const bool ok = transmit_power_w > 0.0 && std::isfinite(transmit_power_w) &&
                  aggregate_loss > 0.0 && aggregate_loss <= 1.0 && noise_power_w > 0.0 &&
                  std::isfinite(noise_power_w);
  if (!ok) {
    throw DomainError("LinkBudget: powers must be positive and finite, loss in (0, 1]");
  }
}

double budget_to_snr(const LinkBudget& budget) {
  budget.validate();
  return budget.transmit_power_w * budget.aggregate_loss / budget.noise_power_w;
}

ChannelParams::ChannelParams(double mean_snr, double rho) : mean_snr_(mean_snr), rho_(rho) {
  if (!(mean_snr > 0.0) || !std::isfinite(mean_snr)) {
    throw DomainError("mean SNR must be positive and finite, got " + std::to_string(mean_snr));
  }
  check_rho(rho);
  if (rho < 1.0) {
    a_ = 2.0 / (1.0 - rho) * std::sqrt((1.0 + rho) / mean_snr);
    b_ = a_ * std::sqrt(rho);
    c1_ = a_ * a_ * (1.0 - rho) / (2.0 * std::numbers::ln2);
  }
}

double ChannelParams::a() const {
  require_analytic(*this, "ChannelParams::a");
  return a_;
}

double ChannelParams::b() const {
  require_analytic(*this, "ChannelParams::b");
  return b_;
}

double ChannelParams::c1() const {
  require_analytic(*this, "ChannelParams::c1");
  return c1_;
}

ChannelParams params_from_receiver_snr(double snr_db, double rho) {
  check_rho(rho);
  return ChannelParams(db_to_linear(snr_db), rho);
}

ChannelParams params_from_power_budget(double snr_i_db, double rho) {
  check_rho(rho);
  return ChannelParams(db_to_linear(snr_i_db) * (1.0 + rho), rho);
}

std::string_view to_string(SnrMode mode) {
  switch (mode) {
  case SnrMode::fixed_receiver_snr:
    return "fixed_receiver_snr";
  case SnrMode::fixed_power_budget:
    return "fixed_power_budget";
  }
  return "?";
}

SnrMode snr_mode_from_string(std::string_view text) {
  if (text == "fixed_receiver_snr" || text == "receiver") return SnrMode::fixed_receiver_snr;
  if (text == "fixed_power_budget" || text == "budget") return SnrMode::fixed_power_budget;
  throw ConfigError("unknown SNR mode '" + std::string(text) +
                    "' (expected fixed_receiver_snr or fixed_power_budget)");
}

double Parameterization::receiver_mean_snr() const {
  validate();
  return mode == SnrMode::fixed_power_budget ? snr_linear * (1.0 + rho) : snr_linear;
}

ChannelParams Parameterization::channel() const {
  return ChannelParams(receiver_mean_snr(), rho);
}

void Parameterization::validate() const {
  if (!(snr_linear > 0.0) || !std::isfinite(snr_linear)) {
    throw DomainError("SNR must be positive and finite");
  }
  check_rho(rho);
}

double density_in_u(double rho, double u) {
  if (u <= 0.0) return 0.0;
  const double sr = std::sqrt(rho);
  const double exponent = (sr - 1.0) * u;
  if (exponent < kMinExponent) return 0.0;
  return (1.0 - rho) * u * special::bessel_i0_scaled(sr * u) * special::bessel_k0_scaled(u) *
         std::exp(exponent);
}

double pdf(const ChannelParams& params, double gamma) {
  if (std::isnan(gamma)) throw DomainError("pdf: gamma is NaN");
  require_analytic(params, "pdf");
  if (gamma < 0.0) return 0.0;
  if (gamma == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(gamma)) return 0.0;
  const double rho = params.rho();
  const double t = std::sqrt(gamma);
  const double exponent = (params.b() - params.a()) * t;
  if (exponent < kMinExponent) return 0.0;
  const double front = 2.0 / params.mean_snr() * (1.0 + rho) / (1.0 - rho);
  return front * special::bessel_i0_scaled(params.b() * t) *
         special::bessel_k0_scaled(params.a() * t) * std::exp(exponent);
}

double cdf(const ChannelParams& params, double gamma, const AccuracyPolicy& policy) {
  if (std::isnan(gamma) || gamma < 0.0) {
    throw DomainError("cdf: gamma must be >= 0");
  }
  require_analytic(params, "cdf");
  if (gamma == 0.0) return 0.0;
  return cdf_in_u(params.rho(), params.a() * std::sqrt(gamma), policy);
}

std::vector<double> cdf_sorted(const ChannelParams& params, std::span<const double> sorted,
                               const AccuracyPolicy& policy) {
  require_analytic(params, "cdf_sorted");
  std::vector<double> out;
  out.reserve(sorted.size());
  if (sorted.empty()) return out;
  if (!std::is_sorted(sorted.begin(), sorted.end()) || sorted.front() < 0.0) {
    throw DomainError("cdf_sorted: points must be non-negative and non-decreasing");
  }
  const double rho = params.rho();
  const double a = params.a();
  auto f = [rho](double u) { return density_in_u(rho, u); };

  double prev_u = a * std::sqrt(sorted.front());
  double acc = cdf_in_u(rho, prev_u, policy);
  double comp = 0.0;
  out.push_back(acc);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double u = a * std::sqrt(sorted[i]);
    const double width = u - prev_u;
    double piece = 0.0;
    if (width > 0.0) {
      // Short panels far (relative to their width) from the log singularity at the
      // origin are smooth enough for a single Gauss-Legendre panel.
      if (width <= 0.5 && width <= 0.5 * prev_u) {
        piece = quadrature::integrate_panel(f, prev_u, u);
      } else {
        auto g = [&f](double x, double, double) { return f(x); };
        piece = quadrature::integrate_interval(g, prev_u, u, policy).value;
      }
    }
    const double t = acc + piece;
    comp += (acc - t) + piece;
    acc = t;
    out.push_back(std::clamp(acc + comp, 0.0, 1.0));
    prev_u = u;
  }
  return out;
}

double normalized_moment(double rho, double k) {
  check_rho(rho);
  if (!(k > -0.5) || !std::isfinite(k)) {
    throw DomainError("normalized_moment: order must satisfy k > -1/2");
  }
  const double g = std::tgamma(1.0 + k);
  const double hyp = (k == std::floor(k) && k <= 1000.0)
                         ? special::hyp2f1_neg_int(static_cast<int>(k), rho)
                         : special::hyp2f1(-k, -k, 1.0, rho);
  return std::pow(1.0 + rho, -k) * g * g * hyp;
}

double moment(const ChannelParams& params, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw DomainError("moment: order must be a finite k >= 0");
  }
  return std::pow(params.mean_snr(), k) * normalized_moment(params.rho(), k);
}

double moment_log_derivative(double rho) {
  check_rho(rho);
  return -2.0 * special::kEulerGamma - std::log1p(rho);
}

} // namespace bscap::channel
