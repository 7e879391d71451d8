// SPDX-License-Identifier: Apache-2.0
#include "bscap_cli/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <tuple>

#include <bscap/errors.hpp>

namespace bscap::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::string point_label(channel::SnrMode mode, double snr_db, double rho, capacity::Method m) {
  return "mode=" + std::string(channel::to_string(mode)) + " snr_db=" + std::to_string(snr_db) +
         " rho=" + std::to_string(rho) + " method=" + std::string(capacity::to_string(m));
}

} // namespace

OutputFormat output_format_from_string(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

capacity::Method method_from_string(std::string_view text) {
  using capacity::Method;
  for (Method m : {Method::quadrature, Method::series, Method::asymptotic_high,
                   Method::asymptotic_low, Method::awgn_reference, Method::rayleigh_reference,
                   Method::monte_carlo}) {
    if (capacity::to_string(m) == text) return m;
  }
  throw UsageError("unknown method '" + std::string(text) +
                   "' (expected quadrature, series, asymptotic_high, asymptotic_low, mc, awgn "
                   "or rayleigh)");
}

std::vector<capacity::Method> parse_methods(std::string_view text) {
  std::vector<capacity::Method> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(',', pos);
    out.push_back(method_from_string(trim(text.substr(pos, next - pos))));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw UsageError("empty grid");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true) {
      const std::size_t next = text.find(':', pos);
      parts.push_back(parse_number(text.substr(pos, next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw UsageError("range must be start:stop:step");
    const double start = parts[0];
    const double stop = parts[1];
    const double step = parts[2];
    if (!(step > 0.0)) throw UsageError("range step must be positive");
    if (stop < start) throw UsageError("range stop must not be below start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw UsageError("range has too many points");
    for (long i = 0; i < count; ++i) {
      // Snap to 1e-9 so 0.1-style steps do not print as 0.30000000000000004.
      out.push_back(std::round((start + i * step) * 1e9) / 1e9);
    }
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(',', pos);
    out.push_back(parse_number(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

void SweepSpec::validate() const {
  if (snr_db_grid.empty()) throw UsageError("snr_db_grid must not be empty");
  for (std::size_t i = 0; i < snr_db_grid.size(); ++i) {
    if (!std::isfinite(snr_db_grid[i])) throw UsageError("snr_db_grid values must be finite");
    if (i > 0 && !(snr_db_grid[i] > snr_db_grid[i - 1])) {
      throw UsageError("snr_db_grid must be strictly increasing");
    }
  }
  if (rho_list.empty()) throw UsageError("rho_list must not be empty");
  for (std::size_t i = 0; i < rho_list.size(); ++i) {
    if (!(rho_list[i] >= 0.0 && rho_list[i] <= 1.0)) {
      throw UsageError("rho values must lie in [0, 1], got " + std::to_string(rho_list[i]));
    }
    if (i > 0 && !(rho_list[i] > rho_list[i - 1])) {
      throw UsageError("rho_list must be strictly increasing");
    }
  }
  if (methods.empty()) throw UsageError("at least one method is required");
  std::set<capacity::Method> seen;
  for (auto m : methods) {
    if (!seen.insert(m).second) {
      throw UsageError("method '" + std::string(capacity::to_string(m)) + "' listed twice");
    }
    const bool analytic = m == capacity::Method::quadrature || m == capacity::Method::series;
    if (analytic && rho_list.back() == 1.0) {
      throw UsageError("method '" + std::string(capacity::to_string(m)) +
                       "' has no analytic density at rho = 1; use mc or the asymptotes there");
    }
  }
  try {
    (void)policy();
    if (mc) mc->validate();
  } catch (const bscap::Error& e) {
    throw UsageError(e.what());
  }
}

AccuracyPolicy SweepSpec::policy() const { return AccuracyPolicy{}.with_rel_tol(rel_tol); }

Row evaluate_point(channel::SnrMode mode, double snr_db, double rho, capacity::Method method,
                   const AccuracyPolicy& policy, const mc::McConfig& mc_config) {
  using capacity::Method;
  const channel::Parameterization param{mode, channel::db_to_linear(snr_db), rho};
  Row row;
  row.mode = mode;
  row.rho = rho;
  row.snr_db = snr_db;
  row.method = std::string(capacity::to_string(method));
  try {
    row.gamma_bar_linear = param.receiver_mean_snr();
    capacity::CapacityEstimate est;
    switch (method) {
    case Method::quadrature:
      est = capacity::capacity_quadrature(param.channel(), policy);
      break;
    case Method::series:
      est = capacity::capacity_series(param.channel(), policy);
      break;
    case Method::asymptotic_high:
      est = mode == channel::SnrMode::fixed_power_budget
                ? capacity::capacity_high_snr_budget(param.snr_linear)
                : capacity::capacity_high_snr(param.channel());
      break;
    case Method::asymptotic_low:
      est = capacity::capacity_low_snr(param);
      break;
    case Method::awgn_reference:
      est = capacity::capacity_awgn(param.snr_linear);
      break;
    case Method::rayleigh_reference:
      est = capacity::capacity_rayleigh(param.snr_linear);
      break;
    case Method::monte_carlo: {
      const auto r = mc::estimate_capacity(param, mc_config);
      est.value = r.estimate;
      est.method = Method::monte_carlo;
      est.error_bound = r.std_error;
      est.diagnostics.samples = r.n_samples;
      est.diagnostics.batches = r.n_batches;
      est.diagnostics.seed = r.seed;
      break;
    }
    }
    row.capacity_bpshz = est.value;
    row.error_bound = est.error_bound;
    row.diagnostics = est.diagnostics.to_string();
  } catch (const bscap::ConfigError& e) {
    throw UsageError(e.what());
  } catch (const bscap::Error& e) {
    throw NumericalFailure(point_label(mode, snr_db, rho, method) + ": " + e.what());
  }
  return row;
}

void sort_rows(std::vector<Row>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.rho, x.snr_db, x.method) < std::tie(y.rho, y.snr_db, y.method);
  });
}

std::vector<Row> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto policy = spec.policy();
  const auto mc_config = spec.mc_config();
  std::vector<Row> rows;
  rows.reserve(spec.rho_list.size() * spec.snr_db_grid.size() * spec.methods.size());
  for (double rho : spec.rho_list) {
    for (double snr_db : spec.snr_db_grid) {
      for (auto m : spec.methods) {
        rows.push_back(evaluate_point(spec.mode, snr_db, rho, m, policy, mc_config));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

} // namespace bscap::cli
