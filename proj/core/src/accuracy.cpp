// SPDX-License-Identifier: Apache-2.0
#include "bscap/accuracy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bscap/errors.hpp"

namespace bscap {

AccuracyPolicy::AccuracyPolicy()
    : AccuracyPolicy(kDefaultRelTol, kDefaultAbsTol, kDefaultMaxNodes, kDefaultTruncationMargin) {}

AccuracyPolicy::AccuracyPolicy(double rel_tol, double abs_tol, int max_quadrature_nodes,
                               double contour_truncation_margin)
    : rel_tol_(rel_tol), abs_tol_(abs_tol), max_nodes_(max_quadrature_nodes),
      margin_(contour_truncation_margin) {
  constexpr double min_rel = 100.0 * std::numeric_limits<double>::epsilon();
  if (!(rel_tol_ >= min_rel) || !std::isfinite(rel_tol_)) {
    throw ConfigError("rel_tol must be finite and >= 100 * machine epsilon, got " +
                      std::to_string(rel_tol_));
  }
  if (!(abs_tol_ > 0.0) || !std::isfinite(abs_tol_)) {
    throw ConfigError("abs_tol must be finite and positive");
  }
  if (max_nodes_ < 16) {
    throw ConfigError("max_quadrature_nodes must be at least 16");
  }
  if (!(margin_ > 0.0) || !std::isfinite(margin_)) {
    throw ConfigError("contour_truncation_margin must be finite and positive");
  }
}

AccuracyPolicy AccuracyPolicy::with_rel_tol(double rel_tol) const {
  return AccuracyPolicy(rel_tol, abs_tol_, max_nodes_, margin_);
}

} // namespace bscap
