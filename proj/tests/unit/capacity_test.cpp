// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "bscap/capacity.hpp"
#include "bscap/errors.hpp"
#include "bscap/meijer_g.hpp"
#include "bscap/special_functions.hpp"
#include "frozen_oracles.hpp"

namespace {

using namespace bscap;
using namespace bscap::capacity;
using channel::ChannelParams;

struct Point {
  double mean;
  double rho;
  double ref;
};

const Point kFrozen[] = {
    {1.0, 0.0, oracle::kCapacity1Rho0},       {10.0, 0.5, oracle::kCapacity10Rho05},
    {1000.0, 0.0, oracle::kCapacity1000Rho0}, {0.1, 0.9, oracle::kCapacity01Rho09},
    {1000.0, 0.9, oracle::kCapacity1000Rho09},
};

TEST(Quadrature, FrozenValues) {
  for (const auto& p : kFrozen) {
    const auto e = capacity_quadrature(ChannelParams(p.mean, p.rho));
    EXPECT_NEAR(e.value, p.ref, 1e-10 * p.ref) << p.mean << " " << p.rho;
    EXPECT_EQ(e.method, Method::quadrature);
    EXPECT_FALSE(e.is_asymptotic());
    EXPECT_GT(e.error_bound, 0.0);
    EXPECT_LT(e.error_bound, 1e-9 * p.ref);
    EXPECT_GT(*e.diagnostics.nodes, 0);
  }
}

TEST(Quadrature, AgreesWithBoostOnTheGammaForm) {
  boost::math::quadrature::exp_sinh<double> rule;
  for (double rho : {0.2, 0.7}) {
    const ChannelParams p(3.0, rho);
    auto f = [&](double t) {
      const double g = 3.0 * t * t;
      const double d = channel::pdf(p, g);
      if (g == 0.0 || d == 0.0) return 0.0;
      return 6.0 * t * d * std::log2(1.0 + g);
    };
    const double ref = rule.integrate(f);
    EXPECT_NEAR(capacity_quadrature(p).value, ref, 1e-9 * ref);
  }
}

TEST(Quadrature, RhoOneUnsupported) {
  EXPECT_THROW(capacity_quadrature(ChannelParams(1.0, 1.0)), UnsupportedError);
  EXPECT_THROW(capacity_series(ChannelParams(1.0, 1.0)), UnsupportedError);
}

TEST(Series, FrozenValues) {
  for (const auto& p : kFrozen) {
    const auto e = capacity_series(ChannelParams(p.mean, p.rho));
    EXPECT_NEAR(e.value, p.ref, 1e-8 * p.ref) << p.mean << " " << p.rho;
    EXPECT_LE(e.error_bound, 1e-7 * p.ref);
  }
}

TEST(Series, UncorrelatedUsesOneTerm) {
  for (double db : {-10.0, 0.0, 30.0}) {
    EXPECT_EQ(*capacity_series(channel::params_from_receiver_snr(db, 0.0)).diagnostics.terms, 1);
  }
}

TEST(Series, MatchesQuadratureAcrossGrid) {
  for (double rho : {0.3, 0.6}) {
    for (double db : {-10.0, 5.0, 20.0}) {
      const auto p = channel::params_from_receiver_snr(db, rho);
      const double q = capacity_quadrature(p).value;
      EXPECT_NEAR(capacity_series(p).value, q, 1e-6 * q) << db << " " << rho;
    }
  }
}

TEST(Series, FirstTermEqualsQuadratureAtRhoZero) {
  // With b = 0 only k = 0 survives: C1 * 1/2 * G0.
  const ChannelParams p(1.0, 0.0);
  special::GParams g{4, 1, series_kernel_upper(0), series_kernel_lower(0), 0.25 * p.a() * p.a()};
  const double g0 = special::meijer_g(g, {}, series_kernel_abscissa(0)).value;
  EXPECT_NEAR(p.c1() * 0.5 * g0, oracle::kCapacity1Rho0, 1e-12);
  EXPECT_NEAR(std::exp(series_log_weight(0.0, 0)), 0.5, 1e-16);
}

TEST(Series, ReportsNonConvergence) {
  EXPECT_THROW(capacity_series(ChannelParams(1.0, 0.9), {}, 5), ConvergenceError);
  EXPECT_THROW(capacity_series(ChannelParams(1.0, 0.9), {}, 0), ConfigError);
}

TEST(HighSnr, SubstitutionValues) {
  EXPECT_NEAR(capacity_high_snr(ChannelParams(1000.0, 0.0)).value, 8.3002919, 5e-8);
  EXPECT_NEAR(capacity_high_snr(ChannelParams(1000.0, 1.0)).value, 7.3002919, 5e-8);
  EXPECT_NEAR(capacity_high_snr_budget(1e4).value, 11.6222200, 5e-8);
  EXPECT_TRUE(capacity_high_snr(ChannelParams(10.0, 0.5)).is_asymptotic());
  // Offset equals log2(e) times the moment derivative at order zero.
  for (double rho : {0.0, 0.3, 1.0}) {
    const double offset = capacity_high_snr(ChannelParams(1.0, rho)).value;
    EXPECT_NEAR(offset, std::numbers::log2e * channel::moment_log_derivative(rho), 1e-14);
  }
}

TEST(HighSnr, GapShrinksAboveTwentyDb) {
  for (double rho : {0.0, 0.5, 0.9}) {
    const auto r = asymptote_crossover_check(rho, {20.0, 30.0, 40.0});
    EXPECT_TRUE(r.monotone_above_20db) << rho;
    EXPECT_LT(r.points.back().gap, 0.05) << rho;
  }
}

TEST(LowSnr, BoundAndRatio) {
  const channel::Parameterization tiny{channel::SnrMode::fixed_receiver_snr, 1e-6, 0.0};
  const double q = capacity_quadrature(tiny.channel()).value;
  EXPECT_LE(q, capacity_low_snr(tiny).value * (1.0 + 1e-9));
  EXPECT_NEAR(q / capacity_low_snr(tiny).value, 1.0, 1e-5);
  const channel::Parameterization budget{channel::SnrMode::fixed_power_budget, 1e-3, 0.5};
  EXPECT_NEAR(capacity_low_snr(budget).value, std::numbers::log2e * 1.5e-3, 1e-18);
}

TEST(References, AwgnAndRayleigh) {
  EXPECT_DOUBLE_EQ(capacity_awgn(1.0).value, 1.0);
  EXPECT_NEAR(capacity_rayleigh(1000.0).value, oracle::kRayleigh1000, 1e-13);
  EXPECT_THROW(capacity_awgn(0.0), DomainError);
  EXPECT_THROW(capacity_rayleigh(-1.0), DomainError);
}

TEST(References, JensenOrdering) {
  for (double db : {-10.0, 0.0, 10.0, 30.0}) {
    const auto p = channel::params_from_receiver_snr(db, 0.5);
    const double prod = capacity_quadrature(p).value;
    const double ray = capacity_rayleigh(p.mean_snr()).value;
    const double awgn = capacity_awgn(p.mean_snr()).value;
    EXPECT_LT(prod, ray);
    EXPECT_LT(ray, awgn);
  }
}

TEST(Diagnostics, Formatting) {
  Diagnostics d;
  d.nodes = 12;
  d.terms = 3;
  d.seed = 7;
  EXPECT_EQ(d.to_string(), "nodes=12;terms=3;seed=7");
  EXPECT_EQ(Diagnostics{}.to_string(), "");
  EXPECT_EQ(to_string(Method::monte_carlo), "mc");
  EXPECT_EQ(to_string(Method::awgn_reference), "awgn");
}

} // namespace
