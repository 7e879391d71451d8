// SPDX-License-Identifier: Apache-2.0
#include "bscap_cli/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include <bscap/capacity.hpp>
#include <bscap/channel_model.hpp>
#include <bscap/monte_carlo.hpp>
#include <bscap/quadrature.hpp>
#include <bscap/special_functions.hpp>

#include "bscap_cli/figures.hpp"
#include "bscap_cli/output.hpp"

namespace bscap::cli {
namespace {

using channel::ChannelParams;
using channel::Parameterization;
using channel::SnrMode;

/// Collects failures and a short summary for one check.
class Report {
public:
  explicit Report(std::string summary = {}) : summary_(std::move(summary)) {}

  template <class... Args>
  void expect(bool ok, const Args&... what) {
    ++count_;
    if (ok) return;
    std::ostringstream out;
    out.precision(9);
    (out << ... << what);
    failures_.push_back(out.str());
  }

  template <class... Args>
  void note(const Args&... what) {
    std::ostringstream out;
    out.precision(6);
    (out << ... << what);
    if (!summary_.empty()) summary_ += "; ";
    summary_ += out.str();
  }

  CheckResult result() const {
    CheckResult r;
    r.pass = failures_.empty();
    r.failures = failures_;
    std::ostringstream out;
    out << count_ - failures_.size() << "/" << count_ << " comparisons ok";
    if (!summary_.empty()) out << "; " << summary_;
    for (std::size_t i = 0; i < failures_.size() && i < 8; ++i) out << "\n    FAIL " << failures_[i];
    if (failures_.size() > 8) out << "\n    ... " << failures_.size() - 8 << " more";
    r.detail = out.str();
    return r;
  }

private:
  std::string summary_;
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

mc::McConfig mc_config(const ValidationOptions& o, std::uint64_t samples) {
  mc::McConfig c;
  c.n_samples = samples;
  c.seed = o.seed;
  c.threads = o.threads;
  return c;
}

/// int_0^inf gamma^k pdf(gamma) dgamma by exp-sinh quadrature in gamma.
double pdf_moment_by_quadrature(const ChannelParams& p, int k) {
  auto f = [&p, k](double g) { return std::pow(g, k) * channel::pdf(p, g); };
  const AccuracyPolicy policy(1e-12, 1e-300);
  return quadrature::integrate_half_line(f, 0.0, p.mean_snr(), policy).value;
}

double rel_diff(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

double quadrature_capacity(SnrMode mode, double snr_db, double rho) {
  const Parameterization param{mode, channel::db_to_linear(snr_db), rho};
  return capacity::capacity_quadrature(param.channel()).value;
}

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

CheckResult pdf_normalisation(const ValidationOptions&) {
  Report rep;
  double worst_norm = 0.0;
  double worst_mean = 0.0;
  for (double mean : {0.01, 1.0, 100.0}) {
    for (double rho : {0.0, 0.3, 0.6, 0.9, 0.99}) {
      const ChannelParams p(mean, rho);
      const double norm = pdf_moment_by_quadrature(p, 0);
      const double m1 = pdf_moment_by_quadrature(p, 1);
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
      worst_mean = std::max(worst_mean, rel_diff(m1, mean));
      rep.expect(std::abs(norm - 1.0) <= 1e-8, "mean=", mean, " rho=", rho, " integral=", norm);
      rep.expect(rel_diff(m1, mean) <= 1e-7, "mean=", mean, " rho=", rho, " first moment=", m1);
    }
  }
  rep.note("max |int pdf - 1| = ", worst_norm, ", max mean rel err = ", worst_mean);
  return rep.result();
}

CheckResult moment_closed_form(const ValidationOptions& o) {
  Report rep;
  const int orders[] = {1, 2, 3};
  double worst = 0.0;
  double worst_z = 0.0;
  for (double rho : {0.0, 0.3, 0.6, 0.9}) {
    const ChannelParams p(1.0, rho);
    for (int k : orders) {
      const double closed = std::pow(1.0 + rho, -k) * std::pow(std::tgamma(1.0 + k), 2) *
                            special::hyp2f1_neg_int(k, rho);
      const double lib = channel::moment(p, k);
      const double quad = pdf_moment_by_quadrature(p, k);
      worst = std::max(worst, rel_diff(quad, closed));
      rep.expect(rel_diff(quad, closed) <= 1e-7, "rho=", rho, " k=", k, " quadrature=", quad,
                 " closed form=", closed);
      rep.expect(rel_diff(lib, closed) <= 1e-12, "rho=", rho, " k=", k, " moment()=", lib);
    }
    const Parameterization param{SnrMode::fixed_receiver_snr, 1.0, rho};
    const auto mc = mc::estimate_moments(param, orders, mc_config(o, o.mc_samples));
    for (std::size_t i = 0; i < mc.size(); ++i) {
      const double closed = channel::moment(p, orders[i]);
      const double z = std::abs(mc[i].estimate - closed) / mc[i].std_error;
      worst_z = std::max(worst_z, z);
      rep.expect(z <= 3.0, "rho=", rho, " k=", orders[i], " mc=", mc[i].estimate, " +- ",
                 mc[i].std_error, " closed form=", closed);
    }
  }
  rep.note("max quadrature rel err = ", worst, ", max mc |z| = ", worst_z);
  return rep.result();
}

CheckResult series_quadrature(const ValidationOptions&) {
  Report rep;
  double worst = 0.0;
  int max_terms = 0;
  for (double rho : {0.0, 0.3, 0.6, 0.9}) {
    for (double db = -10.0; db <= 30.0; db += 5.0) {
      const auto p = channel::params_from_receiver_snr(db, rho);
      const auto q = capacity::capacity_quadrature(p);
      const auto s = capacity::capacity_series(p);
      const double d = rel_diff(s.value, q.value);
      worst = std::max(worst, d);
      max_terms = std::max(max_terms, *s.diagnostics.terms);
      rep.expect(d <= 1e-6, "snr_db=", db, " rho=", rho, " series=", s.value,
                 " quadrature=", q.value);
      if (rho == 0.0) {
        rep.expect(*s.diagnostics.terms == 1, "snr_db=", db, " rho=0 used ", *s.diagnostics.terms,
                   " series terms");
      }
    }
  }
  rep.note("max rel diff = ", worst, ", max terms = ", max_terms);
  return rep.result();
}

CheckResult high_snr_asymptote(const ValidationOptions&) {
  Report rep;
  for (double rho : {0.0, 0.5, 0.9}) {
    const auto r = capacity::asymptote_crossover_check(rho, {20.0, 30.0, 40.0});
    rep.expect(r.monotone_above_20db, "rho=", rho, " gap not decreasing: ", r.points[0].gap, ", ",
               r.points[1].gap, ", ", r.points[2].gap);
    rep.expect(r.points.back().gap <= 0.05, "rho=", rho, " gap at 40 dB = ", r.points.back().gap);
    rep.note("rho=", rho, " gaps ", r.points[0].gap, "/", r.points[1].gap, "/", r.points[2].gap);
  }
  const double c0 = quadrature_capacity(SnrMode::fixed_receiver_snr, 40.0, 0.0);
  const double c1 = quadrature_capacity(SnrMode::fixed_receiver_snr, 40.0, 0.999);
  rep.expect(std::abs((c0 - c1) - 1.0) <= 0.05, "C(0) - C(0.999) at 40 dB = ", c0 - c1);
  const double d50 = quadrature_capacity(SnrMode::fixed_receiver_snr, 50.0, 0.0) -
                     quadrature_capacity(SnrMode::fixed_receiver_snr, 50.0, 0.999);
  rep.note("C(0) - C(0.999) = ", c0 - c1, " at 40 dB and ", d50, " at 50 dB");
  return rep.result();
}

CheckResult fixed_budget_collapse(const ValidationOptions& o) {
  Report rep;
  const double snr_i = channel::db_to_linear(40.0);
  const double target = capacity::capacity_high_snr_budget(snr_i).value;
  rep.expect(std::abs(target - 11.6222200) <= 1e-6, "asymptote = ", target);
  for (double rho : {0.0, 0.5}) {
    const double c = quadrature_capacity(SnrMode::fixed_power_budget, 40.0, rho);
    rep.expect(std::abs(c - target) <= 0.05, "rho=", rho, " quadrature=", c, " target=", target);
    rep.note("rho=", rho, ": ", c);
  }
  const auto m = mc::estimate_capacity({SnrMode::fixed_power_budget, snr_i, 1.0},
                                       mc_config(o, o.mc_samples));
  rep.expect(std::abs(m.estimate - target) <= 0.05, "rho=1 mc=", m.estimate, " target=", target);
  rep.note("rho=1 (mc): ", m.estimate, " +- ", m.std_error, "; target ", target);
  return rep.result();
}

CheckResult low_snr_benefit(const ValidationOptions& o) {
  Report rep;
  const double snr_i = channel::db_to_linear(-30.0);
  const double awgn = capacity::capacity_awgn(snr_i).value;
  const double c0 = quadrature_capacity(SnrMode::fixed_power_budget, -30.0, 0.0);
  const double c5 = quadrature_capacity(SnrMode::fixed_power_budget, -30.0, 0.5);
  const auto m1 = mc::estimate_capacity({SnrMode::fixed_power_budget, snr_i, 1.0},
                                        mc_config(o, o.mc_samples));
  const double r5 = c5 / c0;
  const double r1 = m1.estimate / c0;
  rep.expect(std::abs(r5 / 1.5 - 1.0) <= 0.05, "C(0.5)/C(0) = ", r5);
  rep.expect(std::abs(r1 / 2.0 - 1.0) <= 0.05, "C(1)/C(0) = ", r1);
  rep.expect(c5 / awgn > 1.0, "rho=0.5 normalised capacity = ", c5 / awgn);
  rep.expect(m1.estimate / awgn > 1.0, "rho=1 normalised capacity = ", m1.estimate / awgn);
  rep.note("C(0.5)/C(0) = ", r5, ", C(1)/C(0) = ", r1, ", normalised ", c5 / awgn, " and ",
           m1.estimate / awgn);
  return rep.result();
}

CheckResult mc_triangle(const ValidationOptions& o, std::uint64_t samples) {
  Report rep;
  double worst_z = 0.0;
  for (const auto& pt : smoke_grid()) {
    const Parameterization param{SnrMode::fixed_receiver_snr, channel::db_to_linear(pt.snr_db),
                                 pt.rho};
    const double q = capacity::capacity_quadrature(param.channel()).value;
    const auto m = mc::estimate_capacity(param, mc_config(o, samples));
    const double z = std::abs(m.estimate - q) / m.std_error;
    worst_z = std::max(worst_z, z);
    rep.expect(z <= 3.0, "snr_db=", pt.snr_db, " rho=", pt.rho, " mc=", m.estimate, " +- ",
               m.std_error, " quadrature=", q);
    const double ray = capacity::capacity_rayleigh(param.snr_linear).value;
    const double awgn = capacity::capacity_awgn(param.snr_linear).value;
    rep.expect(q < ray && ray < awgn, "snr_db=", pt.snr_db, " rho=", pt.rho,
               " ordering product/rayleigh/awgn violated: ", q, ", ", ray, ", ", awgn);
  }
  rep.note("N=", samples, ", max |z| = ", worst_z);
  return rep.result();
}

CheckResult sampler_law(const ValidationOptions& o) {
  Report rep;
  const auto config = mc_config(o, 100'000);
  for (double rho : {0.0, 0.5, 0.9}) {
    const auto ks = mc::ks_test({SnrMode::fixed_receiver_snr, 1.0, rho}, config);
    rep.expect(ks.pass, "rho=", rho, " product KS D=", ks.statistic, " >= ", ks.critical_value);
    const auto marg = mc::ks_test_marginals(rho, config);
    rep.expect(marg.forward.pass, "rho=", rho, " forward marginal D=", marg.forward.statistic);
    rep.expect(marg.backward.pass, "rho=", rho, " backward marginal D=", marg.backward.statistic);
    rep.note("rho=", rho, " D=", ks.statistic);
  }
  return rep.result();
}

/// Finite sum over m <= min(a, b) with the Gamma ratios continued to real x, y.
double cross_sum(double x, double y, int a, int b, double rho) {
  double sum = 0.0;
  double weight = 1.0;
  for (int m = 0; m <= std::min(a, b); ++m) {
    if (m > 0) weight *= rho / (static_cast<double>(m) * m);
    double fx = 1.0;
    double fy = 1.0;
    for (int j = 0; j < m; ++j) {
      fx *= x - j;
      fy *= y - j;
    }
    sum += fx * fy * weight;
  }
  return sum;
}

CheckResult derivative_machinery(const ValidationOptions&) {
  Report rep;
  const double h = 1e-4;
  double worst = 0.0;
  for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double fd =
        (channel::normalized_moment(rho, h) - channel::normalized_moment(rho, -h)) / (2.0 * h);
    const double exact = channel::moment_log_derivative(rho);
    worst = std::max(worst, std::abs(fd - exact));
    rep.expect(std::abs(fd - exact) <= 1e-6, "rho=", rho, " finite difference=", fd,
               " analytic=", exact);
  }
  double worst_cross = 0.0;
  const double hc = 1e-3;
  for (double rho : {0.25, 0.5, 0.9}) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        const double fd = (cross_sum(a + hc, b + hc, a, b, rho) - cross_sum(a + hc, b - hc, a, b, rho) -
                           cross_sum(a - hc, b + hc, a, b, rho) + cross_sum(a - hc, b - hc, a, b, rho)) /
                          (4.0 * hc * hc);
        const double exact = special::hyp2f1_cross_derivative(a, b, rho);
        const double err = std::abs(fd - exact) / std::max(1.0, std::abs(exact));
        worst_cross = std::max(worst_cross, err);
        rep.expect(err <= 1e-5, "a=", a, " b=", b, " rho=", rho, " finite difference=", fd,
                   " analytic=", exact);
      }
    }
  }
  rep.note("moment derivative max err = ", worst, ", cross derivative max err = ", worst_cross);
  return rep.result();
}

CheckResult determinism(const ValidationOptions& o) {
  Report rep;
  const auto config = mc_config(o, 100'000);
  const auto first = to_csv(figure_dataset(FigureId::fig_fixed_budget, {}, config));
  const auto second = to_csv(figure_dataset(FigureId::fig_fixed_budget, {}, config));
  rep.expect(first == second, "figure 2 CSV differs between runs");
  auto threaded = config;
  threaded.threads = 4;
  const auto third = to_csv(figure_dataset(FigureId::fig_fixed_budget, {}, threaded));
  rep.expect(first == third, "figure 2 CSV depends on the thread count");
  rep.note(first.size(), " bytes, seed ", o.seed);
  return rep.result();
}

// ---------------------------------------------------------------------------
// Fast suite
// ---------------------------------------------------------------------------

CheckResult smoke_series(const ValidationOptions&) {
  Report rep;
  for (const auto& pt : smoke_grid()) {
    const auto p = channel::params_from_receiver_snr(pt.snr_db, pt.rho);
    const double q = capacity::capacity_quadrature(p).value;
    const double s = capacity::capacity_series(p).value;
    rep.expect(rel_diff(s, q) <= 1e-6, "snr_db=", pt.snr_db, " rho=", pt.rho, " series=", s,
               " quadrature=", q);
  }
  return rep.result();
}

CheckResult smoke_pdf(const ValidationOptions&) {
  Report rep;
  for (double rho : {0.0, 0.5, 0.9}) {
    const ChannelParams p(1.0, rho);
    const double norm = pdf_moment_by_quadrature(p, 0);
    const double mean = pdf_moment_by_quadrature(p, 1);
    rep.expect(std::abs(norm - 1.0) <= 1e-8, "rho=", rho, " integral=", norm);
    rep.expect(std::abs(mean - 1.0) <= 1e-7, "rho=", rho, " mean=", mean);
  }
  return rep.result();
}

CheckResult smoke_asymptotes(const ValidationOptions&) {
  Report rep;
  const double h0 = capacity::capacity_high_snr(ChannelParams(1000.0, 0.0)).value;
  const double h1 = capacity::capacity_high_snr(ChannelParams(1000.0, 1.0)).value;
  const double awgn = capacity::capacity_awgn(1.0).value;
  rep.expect(std::abs(h0 - 8.3002919) <= 1e-6, "high-SNR asymptote rho=0 at 30 dB = ", h0);
  rep.expect(std::abs(h1 - 7.3002919) <= 1e-6, "high-SNR asymptote rho=1 at 30 dB = ", h1);
  rep.expect(std::abs(awgn - 1.0) <= 1e-15, "awgn at 0 dB = ", awgn);
  return rep.result();
}

CheckResult smoke_sampler(const ValidationOptions& o) {
  Report rep;
  const auto ks = mc::ks_test({SnrMode::fixed_receiver_snr, 1.0, 0.5}, mc_config(o, 20'000));
  rep.expect(ks.pass, "product KS D=", ks.statistic, " >= ", ks.critical_value);
  return rep.result();
}

} // namespace

std::vector<SmokePoint> smoke_grid() {
  std::vector<SmokePoint> out;
  for (double rho : {0.0, 0.5, 0.9}) {
    for (double db : {-10.0, 0.0, 10.0, 20.0}) out.push_back({db, rho});
  }
  return out;
}

std::vector<Check> acceptance_checks() {
  return {
      {"1", "pdf normalisation and mean", pdf_normalisation},
      {"2", "moment closed form", moment_closed_form},
      {"3", "series equals quadrature", series_quadrature},
      {"4", "high-SNR asymptote", high_snr_asymptote},
      {"5", "fixed-budget collapse at 40 dB", fixed_budget_collapse},
      {"6", "low-SNR correlation benefit", low_snr_benefit},
      {"7", "Monte Carlo triangle on the smoke grid",
       [](const ValidationOptions& o) { return mc_triangle(o, o.mc_samples); }},
      {"8", "sampler law (KS)", sampler_law},
      {"9", "derivative machinery", derivative_machinery},
      {"10", "figure output determinism", determinism},
  };
}

std::vector<Check> fast_checks() {
  return {
      {"fast.pdf", "pdf normalisation and mean", smoke_pdf},
      {"fast.series", "series equals quadrature on the smoke grid", smoke_series},
      {"fast.asymptotes", "asymptote and reference values", smoke_asymptotes},
      {"fast.mc", "Monte Carlo within 3 SE of quadrature on the smoke grid",
       [](const ValidationOptions& o) { return mc_triangle(o, o.smoke_samples); }},
      {"fast.ks", "sampler law (KS, N=2e4)", smoke_sampler},
  };
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks,
                                    const ValidationOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check.run(options);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = check.id;
    r.name = check.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds
      << " s): " << r.detail;
  return out.str();
}

} // namespace bscap::cli
