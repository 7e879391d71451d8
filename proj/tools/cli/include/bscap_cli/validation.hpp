// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bscap::cli {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> failures; ///< one entry per failed comparison
  double seconds = 0.0;
};

struct ValidationOptions {
  std::uint64_t mc_samples = 10'000'000;   ///< acceptance Monte Carlo runs
  std::uint64_t smoke_samples = 100'000; ///< fast-suite Monte Carlo runs
  std::uint64_t seed = 20200301;
  int threads = 0;
};

struct Check {
  std::string id;
  std::string name;
  std::function<CheckResult(const ValidationOptions&)> run;
};

/// The twelve (receiver SNR, rho) points shared by the fast suite and the
/// Monte Carlo triangle: {-10, 0, 10, 20} dB x {0, 0.5, 0.9}.
struct SmokePoint {
  double snr_db;
  double rho;
};
std::vector<SmokePoint> smoke_grid();

/// The ten acceptance criteria, in order.
std::vector<Check> acceptance_checks();

/// Smoke-grid checks sized to finish well under a minute.
std::vector<Check> fast_checks();

/// Runs checks in order, converting any exception into a failed result.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    const ValidationOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result = {});

/// "PASS [id] name (1.2 s): detail"
std::string format_result(const CheckResult& result);

} // namespace bscap::cli
