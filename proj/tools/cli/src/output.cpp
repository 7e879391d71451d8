// SPDX-License-Identifier: Apache-2.0
#include "bscap_cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace bscap::cli {
namespace {

// Diagnostics are "k=v;k=v", but quote defensively in case a value ever holds a comma.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

} // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string to_csv(const std::vector<Row>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const Row& r : rows) {
    out += channel::to_string(r.mode);
    out += ',' + format_number(r.rho);
    out += ',' + format_number(r.snr_db);
    out += ',' + format_number(r.gamma_bar_linear);
    out += ',' + csv_field(r.method);
    out += ',' + format_number(r.capacity_bpshz);
    out += ',' + format_number(r.error_bound);
    out += ',' + csv_field(r.diagnostics);
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<Row>& rows, const OutputMetadata& meta) {
  nlohmann::ordered_json doc;
  auto& m = doc["metadata"];
  m["command"] = meta.command;
  m["rel_tol"] = meta.rel_tol;
  if (meta.seed) m["seed"] = *meta.seed;
  if (meta.n_samples) m["n_samples"] = *meta.n_samples;
  if (meta.n_batches) m["n_batches"] = *meta.n_batches;
  auto& arr = doc["rows"];
  arr = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    nlohmann::ordered_json j;
    j["mode"] = channel::to_string(r.mode);
    j["rho"] = json_number(r.rho);
    j["snr_db"] = json_number(r.snr_db);
    j["gamma_bar_linear"] = json_number(r.gamma_bar_linear);
    j["method"] = r.method;
    j["capacity_bpshz"] = json_number(r.capacity_bpshz);
    j["error_bound"] = json_number(r.error_bound);
    j["diagnostics"] = r.diagnostics;
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string render(const std::vector<Row>& rows, OutputFormat format, const OutputMetadata& meta) {
  return format == OutputFormat::json ? to_json(rows, meta) : to_csv(rows);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open '" + tmp.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw UsageError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("cannot move output into place at '" + path + "'");
  }
}

} // namespace bscap::cli
