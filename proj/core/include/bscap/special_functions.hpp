// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>

namespace bscap::special {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = std::numbers::egamma;

// ---------------------------------------------------------------------------
// Modified Bessel functions of order zero, exponentially scaled.
//
// The scaled forms are the primitives: the product-SNR density combines them as
// e^{-(a-b)t} * bessel_i0_scaled(b t) * bessel_k0_scaled(a t), which stays finite
// where I0 overflows and K0 underflows.
// ---------------------------------------------------------------------------

/// e^{-x} I0(x) for finite x >= 0. Throws DomainError otherwise.
double bessel_i0_scaled(double x);

/// e^{x} K0(x) for x > 0 (returns 0 at +inf). Throws DomainError for x <= 0 or NaN.
double bessel_k0_scaled(double x);

/// Unscaled I0; overflows to +inf past x ~ 713.
double bessel_i0(double x);

/// Unscaled K0; underflows to 0 past x ~ 705.
double bessel_k0(double x);

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// Log-gamma on the branch that is analytic off the negative real axis and real on
/// the positive real axis. Continuous along every vertical line that avoids the
/// poles, so exp() of sums of these values is a smooth contour integrand.
/// Throws PoleError at z = 0, -1, -2, ...
std::complex<double> ln_gamma_complex(std::complex<double> z);

/// psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at x = 0, -1, -2, ... and
/// DomainError for non-finite x.
double digamma(double x);

// ---------------------------------------------------------------------------
// Gauss hypergeometric function
// ---------------------------------------------------------------------------

/// 2F1(-k, -k; 1; rho) for integer k >= 0 and rho in [0, 1] as the terminating sum
///   sum_{m=0}^{k} binom(k, m)^2 rho^m.
/// Terms are exact integers times rho^m, so rho = 1 yields binom(2k, k) exactly for
/// moderate k.
double hyp2f1_neg_int(int k, double rho);

/// 2F1(a, b; c; z) for real 0 <= z <= 1 by its power series (terminating when a or
/// b is a non-positive integer) and by Gauss's summation theorem at z = 1, which
/// requires c - a - b > 0. Throws DomainError / ConvergenceError.
double hyp2f1(double a, double b, double c, double z);

/// Mixed derivative d^2/(da db) of 2F1(-a, -b; 1; rho) at integer a, b >= 0, using the
/// finite sum over m <= min(a, b) with digamma differences:
///   sum_m [a!/(a-m)! (psi(a+1) - psi(a-m+1))] [b!/(b-m)! (psi(b+1) - psi(b-m+1))] rho^m / (m!)^2
/// Requires 0 <= rho < 1.
double hyp2f1_cross_derivative(int a, int b, double rho);

// ---------------------------------------------------------------------------
// Exponential integral
// ---------------------------------------------------------------------------

/// E1(x) = int_x^inf e^{-t}/t dt for x > 0.
double exp_integral_e1(double x);

/// e^{x} E1(x) for x > 0; finite for every positive x.
double exp_integral_e1_scaled(double x);

} // namespace bscap::special
