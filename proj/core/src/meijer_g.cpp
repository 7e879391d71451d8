// SPDX-License-Identifier: Apache-2.0
#include "bscap/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bscap/errors.hpp"
#include "bscap/special_functions.hpp"

namespace bscap::special {
namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxTruncation = 1e4;

bool is_gamma_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

double decay_rate(const GParams& g) {
  return std::numbers::pi * (g.m + g.n - 0.5 * (g.p() + g.q()));
}

} // namespace

double ScaledValue::value() const {
  if (mantissa == 0.0) return 0.0;
  return mantissa * std::exp(log_scale);
}

ContourStrip contour_strip(const GParams& g) {
  if (g.m < 0 || g.n < 0 || g.m > g.q() || g.n > g.p()) {
    throw ParameterError("meijer_g: counts must satisfy 0 <= m <= q and 0 <= n <= p");
  }
  if (!(g.z > 0.0) || !std::isfinite(g.z)) {
    throw ParameterError("meijer_g: argument z must be finite and positive");
  }
  for (double v : g.a) {
    if (!std::isfinite(v)) throw ParameterError("meijer_g: non-finite upper parameter");
  }
  for (double v : g.b) {
    if (!std::isfinite(v)) throw ParameterError("meijer_g: non-finite lower parameter");
  }
  ContourStrip strip{-kInf, kInf};
  for (int j = 0; j < g.m; ++j) strip.left = std::max(strip.left, -g.b[j]);
  for (int j = 0; j < g.n; ++j) strip.right = std::min(strip.right, 1.0 - g.a[j]);
  if (!(strip.left < strip.right)) {
    throw ParameterError("meijer_g: no vertical contour separates the pole families (left " +
                         std::to_string(strip.left) + " >= right " +
                         std::to_string(strip.right) + ")");
  }
  if (!(decay_rate(g) > 0.0)) {
    throw ParameterError("meijer_g: integrand does not decay along vertical lines "
                         "(requires m + n > (p + q) / 2)");
  }
  return strip;
}

double default_abscissa(const ContourStrip& strip) {
  const bool lf = std::isfinite(strip.left);
  const bool rf = std::isfinite(strip.right);
  if (lf && rf) return 0.5 * (strip.left + strip.right);
  if (lf) return strip.left + 1.0;
  if (rf) return strip.right - 1.0;
  return 0.0;
}

std::optional<cplx> meijer_g_log_integrand(const GParams& g, cplx s) {
  cplx acc = -s * std::log(g.z);
  for (int j = 0; j < g.m; ++j) acc += ln_gamma_complex(g.b[j] + s);
  for (int j = 0; j < g.n; ++j) acc += ln_gamma_complex(1.0 - g.a[j] - s);
  for (int j = g.m; j < g.q(); ++j) {
    const cplx arg = 1.0 - g.b[j] - s;
    if (is_gamma_pole(arg)) return std::nullopt;
    acc -= ln_gamma_complex(arg);
  }
  for (int j = g.n; j < g.p(); ++j) {
    const cplx arg = g.a[j] + s;
    if (is_gamma_pole(arg)) return std::nullopt;
    acc -= ln_gamma_complex(arg);
  }
  return acc;
}

MeijerResult meijer_g(const GParams& g, const AccuracyPolicy& policy,
                      std::optional<double> abscissa) {
  const ContourStrip strip = contour_strip(g);
  const double c = abscissa.value_or(default_abscissa(strip));
  if (!(c > strip.left && c < strip.right)) {
    throw ParameterError("meijer_g: abscissa " + std::to_string(c) +
                         " lies outside the pole-free strip");
  }
  const double kappa = decay_rate(g);
  const double clearance = std::min({c - strip.left, strip.right - c, 1.0});

  // Reference log-magnitude; the integrand is evaluated as exp(L(t) - ref).
  double ref = 0.0;
  {
    bool found = false;
    for (double t : {0.0, 0.5 * clearance, clearance, 1.0}) {
      if (auto l = meijer_g_log_integrand(g, cplx(c, t))) {
        ref = l->real();
        found = true;
        break;
      }
    }
    if (!found) throw ParameterError("meijer_g: integrand vanishes near the real axis");
  }

  int nodes = 0;
  // Conjugate symmetry for real parameters: G = (1/pi) int_0^inf Re f(c + i t) dt.
  auto eval = [&](double t, double* modulus) {
    ++nodes;
    const auto l = meijer_g_log_integrand(g, cplx(c, t));
    if (!l) {
      if (modulus) *modulus = 0.0;
      return 0.0;
    }
    const cplx v = std::exp(*l - ref);
    if (modulus) *modulus = std::abs(v);
    return v.real();
  };

  // Coarse level: march out until the envelope is negligible.
  double h = std::min(0.25, 0.5 * clearance);
  const double cutoff =
      std::min(policy.rel_tol(), policy.abs_tol()) * std::exp(-policy.contour_truncation_margin());
  double peak = 0.0;
  double sum = 0.0;
  double l1 = 0.0;
  {
    double mod0 = 0.0;
    const double f0 = eval(0.0, &mod0);
    peak = mod0;
    sum = 0.5 * f0;
    l1 = 0.5 * std::abs(f0);
  }
  double truncation = 0.0;
  double last_modulus = peak;
  int quiet = 0;
  for (int j = 1;; ++j) {
    const double t = j * h;
    if (t > kMaxTruncation || nodes > policy.max_quadrature_nodes()) {
      throw ConvergenceError("meijer_g: integrand failed to decay before |Im s| = " +
                             std::to_string(t));
    }
    double mod = 0.0;
    const double f = eval(t, &mod);
    sum += f;
    l1 += std::abs(f);
    peak = std::max(peak, mod);
    truncation = t;
    last_modulus = mod;
    if (mod <= cutoff * peak) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
  }
  const int coarse_points = static_cast<int>(std::lround(truncation / h));

  double estimate = h * sum;
  double diff = 0.0;
  bool converged = false;
  for (int level = 1; level <= 20; ++level) {
    const int points = coarse_points << level;
    const double step = truncation / points;
    for (int j = 1; j < points; j += 2) {
      const double f = eval(j * step, nullptr);
      sum += f;
      l1 += std::abs(f);
    }
    const double next = step * sum;
    diff = std::abs(next - estimate);
    estimate = next;
    const double cancellation_floor = 1e-15 * step * l1;
    if (level >= 2 && diff <= std::max(policy.rel_tol() * std::abs(next), cancellation_floor)) {
      converged = true;
      break;
    }
    if (nodes > policy.max_quadrature_nodes()) break;
  }
  if (!converged) {
    throw ConvergenceError("meijer_g: contour quadrature did not reach rel_tol within " +
                           std::to_string(nodes) + " nodes");
  }

  // Tail beyond the truncation point under the exp(-kappa t) envelope.
  const double tail = last_modulus / kappa;

  MeijerResult r;
  r.scaled = ScaledValue{estimate / std::numbers::pi, ref};
  r.value = r.scaled.value();
  const double scale = std::exp(ref) / std::numbers::pi;
  r.tail_bound = tail * scale;
  r.error_estimate = (diff + tail) * scale;
  r.relative_error = estimate != 0.0 ? (diff + tail) / std::abs(estimate)
                                     : std::numeric_limits<double>::infinity();
  r.abscissa = c;
  r.truncation = truncation;
  r.nodes = nodes;
  return r;
}

} // namespace bscap::special
