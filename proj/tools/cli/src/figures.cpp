// SPDX-License-Identifier: Apache-2.0
#include "bscap_cli/figures.hpp"

#include <algorithm>
#include <string>

namespace bscap::cli {
namespace {

using capacity::Method;
using channel::SnrMode;

std::vector<double> range(double start, double stop, double step) {
  std::vector<double> out;
  for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
  return out;
}

std::vector<double> merged(std::vector<double> x, const std::vector<double>& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

struct Layout {
  SnrMode mode;
  double lo;
  double hi;
  std::vector<double> rhos;
  std::vector<Method> analytic;  ///< rho < 1 only, 2 dB grid
  std::vector<Method> always;    ///< every rho, 2 dB grid
  bool normalise;
};

Layout layout(FigureId figure) {
  switch (figure) {
  case FigureId::fig_fixed_receiver:
    return {SnrMode::fixed_receiver_snr,
            -10.0,
            40.0,
            {0.0, 0.3, 0.6, 0.9},
            {Method::quadrature},
            {Method::asymptotic_high, Method::awgn_reference, Method::rayleigh_reference},
            false};
  case FigureId::fig_fixed_budget:
    return {SnrMode::fixed_power_budget,
            -10.0,
            40.0,
            {0.0, 0.5, 1.0},
            {Method::quadrature},
            {Method::asymptotic_high, Method::awgn_reference, Method::rayleigh_reference},
            false};
  case FigureId::fig_awgn_normalised:
    return {SnrMode::fixed_power_budget,
            -30.0,
            10.0,
            {0.0, 0.5, 1.0},
            {Method::quadrature},
            {Method::asymptotic_low, Method::awgn_reference},
            true};
  }
  throw UsageError("unknown figure");
}

bool applicable(Method m, double snr_db) {
  if (m == Method::asymptotic_high) return snr_db >= 0.0;
  if (m == Method::asymptotic_low) return snr_db <= 0.0;
  return true;
}

} // namespace

FigureId figure_from_number(int number) {
  if (number < 1 || number > 3) {
    throw UsageError("--figure must be 1, 2 or 3, got " + std::to_string(number));
  }
  return static_cast<FigureId>(number);
}

std::vector<Row> figure_dataset(FigureId figure, const AccuracyPolicy& policy,
                                const mc::McConfig& mc_config) {
  const Layout lay = layout(figure);
  const auto curve_grid = range(lay.lo, lay.hi, 2.0);
  const auto marker_grid = range(lay.lo, lay.hi, 5.0);
  const auto full_grid = merged(curve_grid, marker_grid);

  std::vector<Row> rows;
  for (double rho : lay.rhos) {
    const bool analytic = rho < 1.0;
    for (double snr_db : curve_grid) {
      for (Method m : lay.always) {
        if (applicable(m, snr_db)) {
          rows.push_back(evaluate_point(lay.mode, snr_db, rho, m, policy, mc_config));
        }
      }
      if (!analytic) continue;
      for (Method m : lay.analytic) {
        rows.push_back(evaluate_point(lay.mode, snr_db, rho, m, policy, mc_config));
      }
    }
    for (double snr_db : analytic ? marker_grid : full_grid) {
      rows.push_back(evaluate_point(lay.mode, snr_db, rho, Method::monte_carlo, policy, mc_config));
    }
  }

  if (lay.normalise) {
    std::vector<Row> extra;
    for (const Row& r : rows) {
      if (r.method == capacity::to_string(Method::awgn_reference)) continue;
      const double ref = capacity::capacity_awgn(channel::db_to_linear(r.snr_db)).value;
      Row n = r;
      n.method += "_normalised";
      n.capacity_bpshz = r.capacity_bpshz / ref;
      n.error_bound = r.error_bound / ref;
      extra.push_back(std::move(n));
    }
    rows.insert(rows.end(), extra.begin(), extra.end());
  }
  sort_rows(rows);
  return rows;
}

} // namespace bscap::cli
