// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bscap/errors.hpp>

#include "bscap_cli/config.hpp"
#include "bscap_cli/figures.hpp"
#include "bscap_cli/output.hpp"
#include "bscap_cli/sweep.hpp"
#include "bscap_cli/validation.hpp"

namespace {

using namespace bscap;
using namespace bscap::cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

/// Raw flag values; an option only overrides the config file when it was given.
struct Flags {
  std::string config;
  std::string mode;
  std::string snr_db;
  std::string rho;
  std::string methods;
  std::string gamma;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int batches = 0;
  int threads = 0;
  double tol = 0.0;
  std::string out;
  std::string format = "csv";
  int figure = 0;
  std::string suite = "fast";
};

struct Given {
  CLI::Option* config = nullptr;
  CLI::Option* mode = nullptr;
  CLI::Option* snr_db = nullptr;
  CLI::Option* rho = nullptr;
  CLI::Option* methods = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* batches = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* tol = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
};

bool given(const CLI::Option* opt) { return opt && opt->count() > 0; }

void add_mc_flags(CLI::App* cmd, Flags& f, Given& g) {
  g.samples = cmd->add_option("--samples", f.samples, "Monte Carlo sample count");
  g.seed = cmd->add_option("--seed", f.seed, "Monte Carlo seed");
  g.batches = cmd->add_option("--batches", f.batches, "Monte Carlo batches (standard errors)");
  g.threads = cmd->add_option("--threads", f.threads, "worker threads; never changes results");
}

void add_output_flags(CLI::App* cmd, Flags& f, Given& g) {
  g.out = cmd->add_option("--out", f.out, "output file (default stdout)");
  g.format = cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  g.tol = cmd->add_option("--tol", f.tol, "relative tolerance of the analytic methods");
}

void add_point_flags(CLI::App* cmd, Flags& f, Given& g) {
  g.mode = cmd->add_option("--mode", f.mode, "fixed_receiver_snr or fixed_power_budget");
  g.snr_db = cmd->add_option("--snr-db", f.snr_db, "SNR grid in dB: a,b,c or start:stop:step");
  g.rho = cmd->add_option("--rho", f.rho, "power correlation list, values in [0, 1]");
}

mc::McConfig overlay_mc(mc::McConfig c, const Flags& f, const Given& g) {
  if (given(g.samples)) c.n_samples = f.samples;
  if (given(g.seed)) c.seed = f.seed;
  if (given(g.batches)) c.n_batches = f.batches;
  if (given(g.threads)) c.threads = f.threads;
  return c;
}

bool mc_flags_given(const Given& g) {
  return given(g.samples) || given(g.seed) || given(g.batches) || given(g.threads);
}

SweepSpec build_spec(const Flags& f, const Given& g) {
  SweepSpec spec;
  if (given(g.config)) spec = load_sweep_config(f.config);
  try {
    if (given(g.mode)) spec.mode = channel::snr_mode_from_string(f.mode);
  } catch (const bscap::Error& e) {
    throw UsageError(e.what());
  }
  if (given(g.snr_db)) spec.snr_db_grid = parse_grid(f.snr_db);
  if (given(g.rho)) spec.rho_list = parse_grid(f.rho);
  if (given(g.methods)) {
    spec.methods = parse_methods(f.methods);
  }
  if (mc_flags_given(g)) spec.mc = overlay_mc(spec.mc_config(), f, g);
  if (given(g.tol)) spec.rel_tol = f.tol;
  if (given(g.out)) spec.output_path = f.out;
  if (given(g.format)) spec.output_format = output_format_from_string(f.format);
  return spec;
}

OutputMetadata metadata(const std::string& command, const SweepSpec& spec, bool uses_mc) {
  OutputMetadata m;
  m.command = command;
  m.rel_tol = spec.rel_tol;
  if (uses_mc) {
    const auto c = spec.mc_config();
    m.seed = c.seed;
    m.n_samples = c.n_samples;
    m.n_batches = c.n_batches;
  }
  return m;
}

bool has_mc(const SweepSpec& spec) {
  for (auto m : spec.methods) {
    if (m == capacity::Method::monte_carlo) return true;
  }
  return false;
}

int run_sweep_command(const std::string& command, const SweepSpec& spec) {
  spec.validate();
  const auto rows = run_sweep(spec);
  write_output(render(rows, spec.output_format, metadata(command, spec, has_mc(spec))),
               spec.output_path);
  return kExitOk;
}

int run_figure_command(const Flags& f, const Given& g) {
  const FigureId fig = figure_from_number(f.figure);
  SweepSpec spec; // carries tolerance, MC and output settings only
  spec.mc = overlay_mc(mc::McConfig{}, f, g);
  if (given(g.tol)) spec.rel_tol = f.tol;
  spec.output_format = output_format_from_string(f.format);
  spec.output_path = f.out;
  try {
    spec.mc->validate();
    (void)spec.policy();
  } catch (const bscap::Error& e) {
    throw UsageError(e.what());
  }
  const auto rows = figure_dataset(fig, spec.policy(), *spec.mc);
  write_output(render(rows, spec.output_format,
                      metadata("figure " + std::to_string(f.figure), spec, true)),
               spec.output_path);
  return kExitOk;
}

int run_pdf_command(const Flags& f, const Given& g) {
  SweepSpec spec = build_spec(f, g);
  if (spec.snr_db_grid.empty() || spec.rho_list.empty()) {
    throw UsageError("pdf needs --snr-db and --rho");
  }
  const auto gammas = parse_grid(f.gamma);
  for (double x : gammas) {
    if (!(x >= 0.0)) throw UsageError("--gamma values must be non-negative");
  }
  const auto policy = spec.policy();
  std::string csv = "mode,rho,snr_db,gamma_bar_linear,gamma,pdf,cdf\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (double rho : spec.rho_list) {
    for (double snr_db : spec.snr_db_grid) {
      const channel::Parameterization param{spec.mode, channel::db_to_linear(snr_db), rho};
      if (rho >= 1.0) throw UsageError("pdf: rho = 1 has no analytic density");
      const auto params = param.channel();
      for (double x : gammas) {
        double density = 0.0;
        double cumulative = 0.0;
        try {
          density = channel::pdf(params, x);
          cumulative = channel::cdf(params, x, policy);
        } catch (const bscap::Error& e) {
          throw NumericalFailure("pdf at rho=" + std::to_string(rho) + " snr_db=" +
                                 std::to_string(snr_db) + " gamma=" + std::to_string(x) + ": " +
                                 e.what());
        }
        csv += std::string(channel::to_string(spec.mode)) + ',' + format_number(rho) + ',' +
               format_number(snr_db) + ',' + format_number(params.mean_snr()) + ',' +
               format_number(x) + ',' + format_number(density) + ',' + format_number(cumulative) +
               '\n';
        nlohmann::ordered_json j;
        j["mode"] = channel::to_string(spec.mode);
        j["rho"] = rho;
        j["snr_db"] = snr_db;
        j["gamma_bar_linear"] = std::stod(format_number(params.mean_snr()));
        j["gamma"] = x;
        j["pdf"] = std::stod(format_number(density));
        j["cdf"] = std::stod(format_number(cumulative));
        rows.push_back(std::move(j));
      }
    }
  }
  std::string text = csv;
  if (spec.output_format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["metadata"]["command"] = "pdf";
    doc["metadata"]["rel_tol"] = spec.rel_tol;
    doc["rows"] = std::move(rows);
    text = doc.dump(2) + "\n";
  }
  write_output(text, spec.output_path);
  return kExitOk;
}

int run_validate_command(const Flags& f, const Given& g) {
  ValidationOptions options;
  if (given(g.seed)) options.seed = f.seed;
  if (given(g.threads)) options.threads = f.threads;
  if (given(g.samples)) {
    options.mc_samples = f.samples;
    options.smoke_samples = f.samples;
  }
  const bool full = f.suite == "full";
  const auto checks = full ? acceptance_checks() : fast_checks();
  const auto results = run_checks(checks, options, [](const CheckResult& r) {
    std::cout << format_result(r) << std::endl;
  });
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "validation passed" : "validation FAILED") << " ("
            << results.size() - failed << "/" << results.size() << " checks)" << std::endl;
  return failed == 0 ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ergodic capacity of correlated Rayleigh backscatter links"};
  app.require_subcommand(1);
  Flags f;
  Given gs, gf, gm, gp, gv;

  auto* sweep = app.add_subcommand("sweep", "capacity over an SNR x rho grid");
  gs.config = sweep->add_option("--config", f.config, "JSON sweep description; flags override it");
  add_point_flags(sweep, f, gs);
  gs.methods = sweep->add_option("--method", f.methods,
                                "comma list of quadrature, series, asymptotic_high, "
                                "asymptotic_low, mc, awgn, rayleigh");
  add_mc_flags(sweep, f, gs);
  add_output_flags(sweep, f, gs);

  auto* figure = app.add_subcommand("figure", "dataset behind one of the three capacity figures");
  figure->add_option("--figure", f.figure, "1 fixed receiver SNR, 2 fixed budget, 3 AWGN-normalised")
      ->required();
  add_mc_flags(figure, f, gf);
  add_output_flags(figure, f, gf);

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo capacity estimates over a grid");
  add_point_flags(mc_cmd, f, gm);
  add_mc_flags(mc_cmd, f, gm);
  add_output_flags(mc_cmd, f, gm);

  auto* pdf = app.add_subcommand("pdf", "tabulate the SNR density and CDF");
  add_point_flags(pdf, f, gp);
  pdf->add_option("--gamma", f.gamma, "instantaneous SNR grid (linear)")->required();
  add_output_flags(pdf, f, gp);

  auto* validate = app.add_subcommand("validate", "run the built-in validation suites");
  validate->add_option("--suite", f.suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  add_mc_flags(validate, f, gv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep->parsed()) return run_sweep_command("sweep", build_spec(f, gs));
    if (figure->parsed()) return run_figure_command(f, gf);
    if (mc_cmd->parsed()) {
      SweepSpec spec = build_spec(f, gm);
      spec.methods = {capacity::Method::monte_carlo};
      spec.mc = spec.mc_config();
      return run_sweep_command("mc", spec);
    }
    if (pdf->parsed()) return run_pdf_command(f, gp);
    if (validate->parsed()) return run_validate_command(f, gv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const bscap::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bscap::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
