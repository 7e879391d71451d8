// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bscap_cli/sweep.hpp"

namespace bscap::cli {

enum class FigureId {
  fig_fixed_receiver = 1,  ///< capacity against receiver mean SNR
  fig_fixed_budget = 2,    ///< capacity against transmit-referenced SNR
  fig_awgn_normalised = 3, ///< capacity over AWGN capacity at low transmit SNR
};

/// Accepts 1, 2 or 3; throws UsageError otherwise.
FigureId figure_from_number(int number);

/// Rows for every curve of a figure, sorted like run_sweep output.
///
/// Analytic curves use a 2 dB grid, Monte Carlo markers a 5 dB grid. rho = 1 has
/// no analytic density, so its curve is Monte Carlo on the union of both grids.
/// The high-SNR asymptote is emitted only at or above 0 dB and the low-SNR one
/// only at or below 0 dB. The normalised figure adds `<method>_normalised` rows
/// holding capacity / log2(1 + snr_I).
std::vector<Row> figure_dataset(FigureId figure, const AccuracyPolicy& policy,
                                const mc::McConfig& mc_config);

} // namespace bscap::cli
