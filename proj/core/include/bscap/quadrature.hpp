// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "bscap/accuracy.hpp"
#include "bscap/errors.hpp"

/// Double-exponential quadrature shared by the density, CDF, moment and capacity
/// integrals. Both rules absorb integrable endpoint singularities (the logarithmic
/// behaviour of K0 at the origin in particular) and refine by halving the step,
/// reusing every previous node.
namespace bscap::quadrature {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes = 0;
  int levels = 0;
};

namespace detail {

inline constexpr double kHalfPi = 0.5 * std::numbers::pi;
inline constexpr int kMaxLevels = 12;
// A node whose weighted contribution is this small relative to the running sum
// ends the outward march of the first level.
inline constexpr double kNegligible = 1e-20;

struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Generic level-refinement driver. `node(tau)` returns the weighted contribution
// w(tau) f(x(tau)); `tau_limit` bounds the outward march on each side.
template <class Node>
Result refine(Node&& node, double tau_limit, const AccuracyPolicy& policy, const char* who) {
  double h = 0.5;
  Accumulator acc;
  int nodes = 1;
  acc.add(node(0.0));

  // Level 0: march outward until contributions are negligible.
  auto march = [&](double direction) {
    int quiet = 0;
    double tau_end = 0.0;
    for (int j = 1;; ++j) {
      const double tau = direction * j * h;
      if (std::abs(tau) > tau_limit) break;
      const double v = node(tau);
      ++nodes;
      acc.add(v);
      tau_end = tau;
      const double ref = std::abs(acc.value());
      if (std::abs(v) <= kNegligible * ref || (v == 0.0 && j > 8)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      if (nodes > policy.max_quadrature_nodes()) break;
    }
    return tau_end;
  };
  const double tau_hi = march(+1.0);
  const double tau_lo = march(-1.0);

  double estimate = h * acc.value();
  for (int level = 1; level <= kMaxLevels; ++level) {
    h *= 0.5;
    for (double tau = tau_lo + h; tau < tau_hi; tau += 2.0 * h) {
      acc.add(node(tau));
      ++nodes;
    }
    const double next = h * acc.value();
    const double diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 2 &&
        diff <= std::max(policy.rel_tol() * std::abs(next), policy.abs_tol())) {
      // Converged levels can agree to the last bit; report at least rounding error.
      const double floor = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(next);
      return Result{next, std::max(diff, floor), nodes, level};
    }
    if (nodes > policy.max_quadrature_nodes()) break;
  }
  throw ConvergenceError(std::string(who) + ": no convergence within " +
                         std::to_string(nodes) + " nodes");
}

} // namespace detail

/// int_lower^inf f(x) dx by the exp-sinh rule x = lower + scale * exp(pi/2 sinh tau).
/// `scale` should sit near the bulk of the integrand so the outward march does not
/// stop before reaching it. `f` must return a finite value (0 in underflowed tails).
template <class F>
Result integrate_half_line(F&& f, double lower, double scale, const AccuracyPolicy& policy) {
  auto node = [&](double tau) {
    const double e = std::exp(detail::kHalfPi * std::sinh(tau));
    const double offset = scale * e;
    if (offset == 0.0 || !std::isfinite(offset)) return 0.0;
    const double w = scale * detail::kHalfPi * std::cosh(tau) * e;
    return w * f(lower + offset);
  };
  return detail::refine(node, 6.5, policy, "integrate_half_line");
}

/// int_a^b f(x) dx by the tanh-sinh rule. `f(x, distance_to_a, distance_to_b)` gets
/// endpoint distances computed without cancellation so singular factors such as
/// log(x - a) keep full relative precision near the ends.
template <class F>
Result integrate_interval(F&& f, double a, double b, const AccuracyPolicy& policy) {
  const double width = b - a;
  if (!(width >= 0.0)) throw DomainError("integrate_interval: requires a <= b");
  if (width == 0.0) return Result{};
  auto node = [&](double tau) {
    const double y = detail::kHalfPi * std::sinh(tau);
    const double ay = std::abs(y);
    if (ay > 350.0) return 0.0;
    const double em = std::exp(-2.0 * ay);
    // distance from the near endpoint, w = width * pi/2 cosh(tau) / (2 cosh^2 y)
    const double near = width * em / (1.0 + em);
    const double far = width - near;
    if (near == 0.0) return 0.0;
    const double w = width * detail::kHalfPi * std::cosh(tau) * 2.0 * em / ((1.0 + em) * (1.0 + em));
    const double da = y < 0.0 ? near : far;
    const double db = y < 0.0 ? far : near;
    const double x = y < 0.0 ? a + near : b - near;
    return w * f(x, da, db);
  };
  return detail::refine(node, 4.5, policy, "integrate_interval");
}

/// Fixed-order Gauss-Legendre nodes and weights on [-1, 1] (computed once).
struct GaussLegendre {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussLegendre gauss_legendre_16();

/// int_a^b f(x) dx with the 16-point Gauss-Legendre rule; for short smooth panels.
template <class F>
double integrate_panel(F&& f, double a, double b) {
  const auto rule = gauss_legendre_16();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

} // namespace bscap::quadrature
