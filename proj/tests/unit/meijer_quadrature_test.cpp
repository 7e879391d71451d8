// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "bscap/capacity.hpp"
#include "bscap/errors.hpp"
#include "bscap/meijer_g.hpp"
#include "bscap/quadrature.hpp"
#include "bscap/special_functions.hpp"
#include "frozen_oracles.hpp"

namespace {

using namespace bscap;
using special::GParams;

GParams series_kernel(int k, double mean, double rho) {
  const channel::ChannelParams p(mean, rho);
  GParams g;
  g.m = 4;
  g.n = 1;
  g.a = capacity::series_kernel_upper(k);
  g.b = capacity::series_kernel_lower(k);
  g.z = 0.25 * p.a() * p.a();
  return g;
}

TEST(MeijerG, LogarithmIdentity) {
  // G^{1,2}_{2,2}[z | 1,1; 1,0] = log(1 + z)
  for (double z : {0.1, 1.0, 3.0, 50.0}) {
    const auto r = special::meijer_g({1, 2, {1.0, 1.0}, {1.0, 0.0}, z});
    EXPECT_NEAR(r.value, std::log1p(z), 1e-10 * std::log1p(z)) << z;
  }
  EXPECT_NEAR(special::meijer_g({1, 2, {1.0, 1.0}, {1.0, 0.0}, 1.0}).value, std::numbers::ln2,
              1e-12);
}

TEST(MeijerG, BesselK0Identity) {
  // G^{2,0}_{0,2}[z | ; 0,0] = 2 K0(2 sqrt z)
  EXPECT_NEAR(special::meijer_g({2, 0, {}, {0.0, 0.0}, 1.0}).value, oracle::kTwoK0At2, 1e-12);
  for (double z : {0.01, 0.5, 9.0}) {
    const double ref = 2.0 * special::bessel_k0(2.0 * std::sqrt(z));
    EXPECT_NEAR(special::meijer_g({2, 0, {}, {0.0, 0.0}, z}).value, ref, 1e-10 * ref);
  }
}

TEST(MeijerG, ExponentialIdentity) {
  for (double z : {0.2, 1.0, 4.0}) {
    EXPECT_NEAR(special::meijer_g({1, 0, {}, {0.0}, z}).value, std::exp(-z), 1e-11);
  }
}

TEST(MeijerG, CapacityKernelsMatchIndependentValues) {
  const struct {
    int k;
    double ref;
  } cases[] = {{0, oracle::kKernel0At10Rho05},
               {1, oracle::kKernel1At10Rho05},
               {5, oracle::kKernel5At10Rho05}};
  for (const auto& c : cases) {
    const auto r = special::meijer_g(series_kernel(c.k, 10.0, 0.5), {},
                                     capacity::series_kernel_abscissa(c.k));
    EXPECT_NEAR(r.value, c.ref, 1e-9 * c.ref) << "k=" << c.k;
    EXPECT_LE(r.relative_error, 1e-8);
  }
}

TEST(MeijerG, ContourInvarianceInsideStrip) {
  for (int k : {0, 2, 7, 20}) {
    const auto g = series_kernel(k, 3.0, 0.6);
    const double c = capacity::series_kernel_abscissa(k);
    const double mid = special::meijer_g(g, {}, c).value;
    for (double shift : {-0.25, 0.25}) {
      const double moved = special::meijer_g(g, {}, c + shift).value;
      EXPECT_NEAR(moved, mid, 1e-9 * std::abs(mid)) << "k=" << k << " shift=" << shift;
    }
  }
}

TEST(MeijerG, ScaledFormSurvivesUnderflow) {
  // Large k pushes the kernel far below double range; the log scale must stay finite.
  const auto r = special::meijer_g(series_kernel(300, 1e-4, 0.9), {},
                                   capacity::series_kernel_abscissa(300));
  EXPECT_TRUE(std::isfinite(r.scaled.log_scale));
  EXPECT_TRUE(std::isfinite(r.scaled.mantissa));
  EXPECT_LT(r.scaled.log_scale, -745.0);
  EXPECT_GT(r.scaled.mantissa, 0.0);
}

TEST(MeijerG, StripAndDefaultAbscissa) {
  const auto strip = special::contour_strip(series_kernel(3, 1.0, 0.5));
  EXPECT_DOUBLE_EQ(strip.left, 4.0);
  EXPECT_DOUBLE_EQ(strip.right, 5.0);
  EXPECT_DOUBLE_EQ(special::default_abscissa(strip), 4.5);
}

TEST(MeijerG, RejectsInvalidParameters) {
  // Poles of Gamma(b1 + s) and Gamma(1 - a1 - s) interleave: no separating line.
  EXPECT_THROW(special::meijer_g({1, 1, {0.0}, {-1.0}, 1.0}), ParameterError);
  // m > q
  EXPECT_THROW(special::meijer_g({2, 0, {}, {0.0}, 1.0}), ParameterError);
  // z must be positive
  EXPECT_THROW(special::meijer_g({1, 0, {}, {0.0}, -1.0}), ParameterError);
  // abscissa outside the strip
  EXPECT_THROW(special::meijer_g(series_kernel(0, 1.0, 0.5), {}, 3.0), ParameterError);
}

// --- Quadrature ---------------------------------------------------------------

TEST(Quadrature, HalfLineClassics) {
  const AccuracyPolicy policy(1e-12, 1e-300);
  auto exp_neg = [](double x) { return std::exp(-x); };
  EXPECT_NEAR(quadrature::integrate_half_line(exp_neg, 0.0, 1.0, policy).value, 1.0, 1e-13);
  auto lorentz = [](double x) { return 1.0 / (1.0 + x * x); };
  EXPECT_NEAR(quadrature::integrate_half_line(lorentz, 0.0, 1.0, policy).value,
              std::numbers::pi / 2.0, 1e-12);
  // log singularity at the endpoint, as in the K0 factor of the density
  auto k0 = [](double x) { return special::bessel_k0(x); };
  EXPECT_NEAR(quadrature::integrate_half_line(k0, 0.0, 1.0, policy).value, std::numbers::pi / 2.0,
              1e-12);
}

TEST(Quadrature, HalfLineAgreesWithBoost) {
  auto f = [](double x) { return std::log1p(x * x) * std::exp(-0.3 * x) * std::sqrt(x); };
  boost::math::quadrature::exp_sinh<double> rule;
  const double ref = rule.integrate(f);
  const double v = quadrature::integrate_half_line(f, 0.0, 3.0, AccuracyPolicy(1e-12, 1e-300)).value;
  EXPECT_NEAR(v, ref, 1e-10 * ref);
}

TEST(Quadrature, IntervalEndpointSingularities) {
  const AccuracyPolicy policy(1e-12, 1e-300);
  auto log_left = [](double, double da, double) { return std::log(da); };
  EXPECT_NEAR(quadrature::integrate_interval(log_left, 0.0, 1.0, policy).value, -1.0, 1e-12);
  auto inv_sqrt = [](double, double da, double db) { return 1.0 / std::sqrt(da * db); };
  EXPECT_NEAR(quadrature::integrate_interval(inv_sqrt, 2.0, 5.0, policy).value, std::numbers::pi,
              1e-11);
  EXPECT_EQ(quadrature::integrate_interval(inv_sqrt, 1.0, 1.0, policy).value, 0.0);
  EXPECT_THROW(quadrature::integrate_interval(inv_sqrt, 1.0, 0.0, policy), DomainError);
}

TEST(Quadrature, GaussLegendrePanelIsExactForPolynomials) {
  auto p = [](double x) { return std::pow(x, 31) - 3.0 * x * x; };
  // degree 31 is the highest a 16-point rule integrates exactly
  const double exact = (std::pow(2.0, 32) - 1.0) / 32.0 - (8.0 - 1.0);
  EXPECT_NEAR(quadrature::integrate_panel(p, 1.0, 2.0), exact, 1e-12 * exact);
}

TEST(Quadrature, DivergentIntegralReportsFailure) {
  auto f = [](double x) { return 1.0 / (1.0 + x); };
  EXPECT_THROW(quadrature::integrate_half_line(f, 0.0, 1.0, AccuracyPolicy{}), ConvergenceError);
}

} // namespace
