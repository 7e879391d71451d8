// SPDX-License-Identifier: Apache-2.0
#include "bscap_cli/config.hpp"

#include <fstream>
#include <set>

#include <bscap/errors.hpp>

namespace bscap::cli {
namespace {

using json = nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw UsageError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T get(const json& obj, const char* key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

std::vector<double> grid_from(const json& value, const char* key) {
  if (value.is_string()) return parse_grid(value.get<std::string>());
  if (!value.is_array()) throw UsageError(std::string("config key '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& v : value) {
    if (!v.is_number()) throw UsageError(std::string("config key '") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

} // namespace

SweepSpec sweep_from_json(const json& doc) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  reject_unknown(doc,
                 {"mode", "snr_db_grid", "rho_list", "methods", "mc", "rel_tol", "output_path",
                  "output_format"},
                 "config");
  SweepSpec spec;
  try {
    if (doc.contains("mode")) spec.mode = channel::snr_mode_from_string(get<std::string>(doc, "mode"));
  } catch (const bscap::Error& e) {
    throw UsageError(e.what());
  }
  if (doc.contains("snr_db_grid")) spec.snr_db_grid = grid_from(doc["snr_db_grid"], "snr_db_grid");
  if (doc.contains("rho_list")) spec.rho_list = grid_from(doc["rho_list"], "rho_list");
  if (doc.contains("methods")) {
    for (const auto& name : get<std::vector<std::string>>(doc, "methods")) {
      spec.methods.push_back(method_from_string(name));
    }
  }
  if (doc.contains("mc")) {
    const json& m = doc["mc"];
    if (!m.is_object()) throw UsageError("config key 'mc' must be an object");
    reject_unknown(m, {"n_samples", "seed", "n_batches", "threads"}, "mc");
    mc::McConfig c;
    if (m.contains("n_samples")) c.n_samples = get<std::uint64_t>(m, "n_samples");
    if (m.contains("seed")) c.seed = get<std::uint64_t>(m, "seed");
    if (m.contains("n_batches")) c.n_batches = get<int>(m, "n_batches");
    if (m.contains("threads")) c.threads = get<int>(m, "threads");
    spec.mc = c;
  }
  if (doc.contains("rel_tol")) spec.rel_tol = get<double>(doc, "rel_tol");
  if (doc.contains("output_path")) spec.output_path = get<std::string>(doc, "output_path");
  if (doc.contains("output_format")) {
    spec.output_format = output_format_from_string(get<std::string>(doc, "output_format"));
  }
  return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  return sweep_from_json(doc);
}

} // namespace bscap::cli
