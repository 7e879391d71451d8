// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <bscap/accuracy.hpp>
#include <bscap/capacity.hpp>
#include <bscap/channel_model.hpp>
#include <bscap/monte_carlo.hpp>

namespace bscap::cli {

/// Bad flags, bad config or an invalid sweep description (exit code 1).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed at a specific sweep point (exit code 2).
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

OutputFormat output_format_from_string(std::string_view text);
capacity::Method method_from_string(std::string_view text);

/// Comma-separated method names.
std::vector<capacity::Method> parse_methods(std::string_view text);

/// Comma list ("0,10,20") or inclusive range ("start:stop:step").
std::vector<double> parse_grid(std::string_view text);

struct SweepSpec {
  channel::SnrMode mode = channel::SnrMode::fixed_receiver_snr;
  std::vector<double> snr_db_grid;
  std::vector<double> rho_list;
  std::vector<capacity::Method> methods;
  std::optional<mc::McConfig> mc;
  double rel_tol = AccuracyPolicy{}.rel_tol();
  std::string output_path; ///< empty writes to stdout
  OutputFormat output_format = OutputFormat::csv;

  /// Throws UsageError; analytic methods at rho = 1 are rejected here.
  void validate() const;
  AccuracyPolicy policy() const;
  mc::McConfig mc_config() const { return mc.value_or(mc::McConfig{}); }
};

/// One output line. `method` is a free string so derived columns such as
/// "quadrature_normalised" share the schema.
struct Row {
  channel::SnrMode mode = channel::SnrMode::fixed_receiver_snr;
  double rho = 0.0;
  double snr_db = 0.0;
  double gamma_bar_linear = 0.0; ///< receiver-side mean SNR
  std::string method;
  double capacity_bpshz = 0.0;
  double error_bound = 0.0; ///< NaN for asymptotes, one standard error for mc
  std::string diagnostics;
};

/// Evaluates one (point, method) pair. Library failures become NumericalFailure
/// naming the point.
Row evaluate_point(channel::SnrMode mode, double snr_db, double rho, capacity::Method method,
                   const AccuracyPolicy& policy, const mc::McConfig& mc_config);

/// Sorts by (rho, snr_db, method).
void sort_rows(std::vector<Row>& rows);

std::vector<Row> run_sweep(const SweepSpec& spec);

} // namespace bscap::cli
