// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bscap_cli/sweep.hpp"

namespace bscap::cli {

inline constexpr const char* kCsvHeader =
    "mode,rho,snr_db,gamma_bar_linear,method,capacity_bpshz,error_bound,diagnostics";

/// Nine significant digits ("%.9g"); NaN prints as "nan".
std::string format_number(double value);

/// Run description placed in the JSON header.
struct OutputMetadata {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> n_samples;
  std::optional<int> n_batches;
  double rel_tol = 0.0;
};

std::string to_csv(const std::vector<Row>& rows);
std::string to_json(const std::vector<Row>& rows, const OutputMetadata& meta);
std::string render(const std::vector<Row>& rows, OutputFormat format, const OutputMetadata& meta);

/// Writes `text` to `path` through a temporary sibling file and a rename, so a
/// failed run never leaves partial output. Empty path writes to stdout.
void write_output(const std::string& text, const std::string& path);

} // namespace bscap::cli
