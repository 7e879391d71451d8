// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "bscap_cli/sweep.hpp"

namespace bscap::cli {

/// Builds a SweepSpec from a JSON object whose keys are the SweepSpec field names
/// (mode, snr_db_grid, rho_list, methods, mc, rel_tol, output_path, output_format).
/// snr_db_grid may be an array or a grid string. Unknown keys, also inside "mc",
/// raise UsageError. The result is not validated.
SweepSpec sweep_from_json(const nlohmann::json& doc);

/// Reads and parses a config file; throws UsageError on I/O or syntax errors.
SweepSpec load_sweep_config(const std::string& path);

} // namespace bscap::cli
