// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bscap {

/// Tolerances shared by the quadrature, contour-integral and series routines.
///
/// Immutable once constructed; the constructor rejects non-positive tolerances and a
/// relative tolerance finer than 100 machine epsilons.
class AccuracyPolicy {
public:
  static constexpr double kDefaultRelTol = 1e-10;
  static constexpr double kDefaultAbsTol = 1e-14;
  static constexpr int kDefaultMaxNodes = 200000;
  static constexpr double kDefaultTruncationMargin = 10.0;

  AccuracyPolicy();
  AccuracyPolicy(double rel_tol, double abs_tol, int max_quadrature_nodes = kDefaultMaxNodes,
                 double contour_truncation_margin = kDefaultTruncationMargin);

  double rel_tol() const noexcept { return rel_tol_; }
  double abs_tol() const noexcept { return abs_tol_; }
  int max_quadrature_nodes() const noexcept { return max_nodes_; }
  /// Extra e-folds of integrand decay required beyond the tolerance before a
  /// contour or half-line integral is truncated.
  double contour_truncation_margin() const noexcept { return margin_; }

  AccuracyPolicy with_rel_tol(double rel_tol) const;

private:
  double rel_tol_;
  double abs_tol_;
  int max_nodes_;
  double margin_;
};

} // namespace bscap
