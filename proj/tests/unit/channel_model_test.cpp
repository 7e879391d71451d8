// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "bscap/accuracy.hpp"
#include "bscap/channel_model.hpp"
#include "bscap/errors.hpp"
#include "frozen_oracles.hpp"

namespace {

using namespace bscap;
using namespace bscap::channel;

TEST(Conversions, DecibelsRoundTrip) {
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(30.0), 1000.0, 1e-12);
  EXPECT_NEAR(db_to_linear(-20.0), 0.01, 1e-17);
  for (double db : {-37.5, -3.0, 0.1, 42.0}) EXPECT_NEAR(linear_to_db(db_to_linear(db)), db, 1e-12);
}

TEST(LinkBudget, EquivalentNoiseAndSnr) {
  LinkBudget b{2.0, 0.5, 0.1};
  EXPECT_DOUBLE_EQ(b.equivalent_noise_w(), 0.2);
  EXPECT_DOUBLE_EQ(budget_to_snr(b), 10.0);
  EXPECT_THROW((LinkBudget{1.0, 0.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((LinkBudget{1.0, 1.5, 1.0}.validate()), DomainError);
  EXPECT_THROW((LinkBudget{-1.0, 0.5, 1.0}.validate()), DomainError);
}

TEST(ChannelParams, KernelConstants) {
  const ChannelParams p(10.0, 0.5);
  const double a = 2.0 / 0.5 * std::sqrt(1.5 / 10.0);
  EXPECT_NEAR(p.a(), a, 1e-15);
  EXPECT_NEAR(p.b(), a * std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(p.c1(), a * a * 0.5 / (2.0 * std::log(2.0)), 1e-14);
  EXPECT_DOUBLE_EQ(ChannelParams(1.0, 0.0).b(), 0.0);
}

TEST(ChannelParams, RhoOneIsRepresentableButNotAnalytic) {
  const ChannelParams p(5.0, 1.0);
  EXPECT_FALSE(p.analytic_supported());
  EXPECT_THROW((void)p.a(), UnsupportedError);
  EXPECT_THROW(pdf(p, 1.0), UnsupportedError);
}

TEST(ChannelParams, RejectsBadArguments) {
  EXPECT_THROW(ChannelParams(0.0, 0.5), DomainError);
  EXPECT_THROW(ChannelParams(-1.0, 0.5), DomainError);
  EXPECT_THROW(ChannelParams(1.0, -0.1), DomainError);
  EXPECT_THROW(ChannelParams(1.0, 1.1), DomainError);
  EXPECT_THROW(ChannelParams(std::numeric_limits<double>::infinity(), 0.5), DomainError);
}

TEST(Parameterization, ReceiverAndBudgetModes) {
  EXPECT_NEAR(params_from_receiver_snr(-20.0, 0.5).mean_snr(), 0.01, 1e-17);
  EXPECT_NEAR(params_from_power_budget(-20.0, 0.5).mean_snr(), 0.015, 1e-17);
  const Parameterization budget{SnrMode::fixed_power_budget, 4.0, 0.25};
  EXPECT_DOUBLE_EQ(budget.receiver_mean_snr(), 5.0);
  const Parameterization receiver{SnrMode::fixed_receiver_snr, 4.0, 0.25};
  EXPECT_DOUBLE_EQ(receiver.receiver_mean_snr(), 4.0);
  EXPECT_EQ(snr_mode_from_string("fixed_power_budget"), SnrMode::fixed_power_budget);
  EXPECT_EQ(to_string(SnrMode::fixed_receiver_snr), "fixed_receiver_snr");
  EXPECT_THROW(snr_mode_from_string("sideways"), ConfigError);
}

TEST(Pdf, AnchorValues) {
  EXPECT_NEAR(pdf(ChannelParams(1.0, 0.5), 1.0), oracle::kPdf1Rho05At1, 1e-14);
  // rho = 0, mean 1: f(1) = 2 K0(2)
  EXPECT_NEAR(pdf(ChannelParams(1.0, 0.0), 1.0), oracle::kTwoK0At2, 1e-15);
  EXPECT_EQ(pdf(ChannelParams(1.0, 0.5), -1.0), 0.0);
  EXPECT_TRUE(std::isinf(pdf(ChannelParams(1.0, 0.5), 0.0)));
}

TEST(Pdf, MatchesDirectBesselFormula) {
  for (double rho : {0.0, 0.3, 0.9}) {
    const ChannelParams p(2.0, rho);
    for (double g : {0.01, 0.5, 3.0, 20.0}) {
      const double ref = 2.0 / 2.0 * (1.0 + rho) / (1.0 - rho) *
                         boost::math::cyl_bessel_i(0, p.b() * std::sqrt(g)) *
                         boost::math::cyl_bessel_k(0, p.a() * std::sqrt(g));
      EXPECT_NEAR(pdf(p, g), ref, 1e-13 * ref) << rho << " " << g;
    }
  }
}

TEST(Pdf, FarTailUnderflowsToZeroWithoutNaN) {
  const double v = pdf(ChannelParams(1.0, 0.5), 1e7);
  EXPECT_EQ(v, 0.0);
}

TEST(Pdf, NormalisationAndMeanAgainstBoostQuadrature) {
  boost::math::quadrature::exp_sinh<double> rule;
  for (double mean : {0.01, 1.0, 100.0}) {
    for (double rho : {0.0, 0.3, 0.6, 0.9, 0.99}) {
      const ChannelParams p(mean, rho);
      // Integrate in u = sqrt(gamma / mean) to keep Boost's rule on a unit scale.
      // Both integrands vanish like u log u at the origin and decay exponentially.
      auto weighted = [&](double u, int k) {
        const double g = mean * u * u;
        const double d = pdf(p, g);
        if (g == 0.0 || d == 0.0) return 0.0;
        return 2.0 * u * mean * std::pow(g, k) * d;
      };
      auto f0 = [&](double u) { return weighted(u, 0); };
      auto f1 = [&](double u) { return weighted(u, 1); };
      EXPECT_NEAR(rule.integrate(f0), 1.0, 1e-8) << mean << " " << rho;
      EXPECT_NEAR(rule.integrate(f1) / mean, 1.0, 1e-7) << mean << " " << rho;
    }
  }
}

TEST(Cdf, AnchorAndLimits) {
  const ChannelParams p(1.0, 0.5);
  EXPECT_NEAR(cdf(p, 1.0), oracle::kCdf1Rho05At1, 1e-12);
  EXPECT_EQ(cdf(p, 0.0), 0.0);
  EXPECT_EQ(cdf(p, std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_NEAR(cdf(p, 1e6), 1.0, 1e-14);
}

TEST(Cdf, SortedEvaluationMatchesPointwise) {
  const ChannelParams p(3.0, 0.9);
  std::vector<double> xs;
  for (double x = 1e-4; x < 200.0; x *= 1.37) xs.push_back(x);
  const auto batch = cdf_sorted(p, xs);
  ASSERT_EQ(batch.size(), xs.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_NEAR(batch[i], cdf(p, xs[i]), 1e-10) << xs[i];
    EXPECT_GE(batch[i], prev);
    prev = batch[i];
  }
}

TEST(Moments, ClosedFormExamples) {
  EXPECT_NEAR(moment(ChannelParams(1.0, 0.5), 2.0), 4.0 * 3.25 / 2.25, 1e-13);
  EXPECT_NEAR(normalized_moment(1.0, 2.0), 6.0, 1e-13);
  EXPECT_NEAR(moment(ChannelParams(7.0, 0.3), 1.0), 7.0, 1e-13);
  for (double rho : {0.0, 0.4, 1.0}) EXPECT_NEAR(normalized_moment(rho, 0.0), 1.0, 1e-15);
  // rho = 1 reduces to E{g^(2k)} / 2^k for a unit exponential g
  for (int k = 1; k <= 5; ++k) {
    EXPECT_NEAR(normalized_moment(1.0, k), std::tgamma(1.0 + 2.0 * k) / std::pow(2.0, k),
                1e-12 * std::tgamma(1.0 + 2.0 * k));
  }
}

TEST(Moments, DomainRules) {
  EXPECT_NO_THROW(normalized_moment(0.5, -0.4));
  EXPECT_THROW(normalized_moment(0.5, -0.5), DomainError);
  EXPECT_THROW(moment(ChannelParams(1.0, 0.5), -0.1), DomainError);
  EXPECT_THROW(normalized_moment(1.5, 1.0), DomainError);
}

TEST(Moments, LogDerivativeAtZero) {
  EXPECT_NEAR(moment_log_derivative(0.0), oracle::kMomentLogDerivRho0, 1e-15);
  EXPECT_NEAR(moment_log_derivative(0.5), oracle::kMomentLogDerivRho05, 1e-15);
  const double h = 1e-4;
  for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double fd = (normalized_moment(rho, h) - normalized_moment(rho, -h)) / (2.0 * h);
    EXPECT_NEAR(fd, moment_log_derivative(rho), 1e-6) << rho;
  }
}

TEST(DensityInU, IntegratesToOneForEveryRho) {
  boost::math::quadrature::exp_sinh<double> rule;
  for (double rho : {0.0, 0.5, 0.95}) {
    const double scale = 1.0 / (1.0 - std::sqrt(rho));
    auto f = [&](double t) { return scale * density_in_u(rho, scale * t); };
    EXPECT_NEAR(rule.integrate(f), 1.0, 1e-9) << rho;
  }
}

TEST(AccuracyPolicy, ValidatesFields) {
  EXPECT_NO_THROW(AccuracyPolicy(1e-8, 1e-12));
  EXPECT_THROW(AccuracyPolicy(1e-17, 1e-12), ConfigError);
  EXPECT_THROW(AccuracyPolicy(1e-8, 0.0), ConfigError);
  EXPECT_THROW(AccuracyPolicy(1e-8, 1e-12, 4), ConfigError);
  EXPECT_THROW(AccuracyPolicy(1e-8, 1e-12, 1000, -1.0), ConfigError);
  EXPECT_DOUBLE_EQ(AccuracyPolicy{}.with_rel_tol(1e-6).rel_tol(), 1e-6);
}

} // namespace
