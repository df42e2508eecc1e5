#pragma once

// JSON and text rendering of check reports. Key order is fixed and all
// exact values are strings, so equal reports give equal bytes.

#include "twy/relations.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace twy {

inline constexpr int kReportVersion = 1;

struct ReportParams {
  std::string spec;
  int n = 0;
  int m = 0;
  int K = 0;
  std::string c;  // "c" when symbolic, else "p/q"
};

struct Report {
  std::optional<ReportParams> params;
  std::vector<CheckReport> checks;

  bool all_pass() const { return twy::all_pass(checks); }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& r : checks) k += !r.pass;
    return k;
  }
};

enum class ReportFormat { Json, Text };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw std::invalid_argument("format must be json or text, got '" + s + "'");
}

inline nlohmann::ordered_json check_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json inst = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.instance) inst[k] = v;
  j["instance"] = inst;
  j["pass"] = r.pass;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  if (rep.params) {
    j["version"] = kReportVersion;
    j["spec"] = rep.params->spec;
    j["params"] = {{"n", rep.params->n}, {"m", rep.params->m}, {"K", rep.params->K}, {"c", rep.params->c}};
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.checks) j["checks"].push_back(check_json(r));
  return j;
}

inline std::string text_line(const CheckReport& r) {
  std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.name;
  for (const auto& [k, v] : r.instance) s += " " + k + "=" + v;
  if (!r.witness.empty()) s += " | " + r.witness;
  return s;
}

/// Compact JSON (one line) for empty reports, indented otherwise.
inline std::string emit_report(const Report& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    auto j = report_json(rep);
    if (!rep.params && rep.checks.empty()) return j.dump() + "\n";
    return j.dump(2) + "\n";
  }
  std::string out;
  if (rep.params)
    out += "spec " + rep.params->spec + " n=" + std::to_string(rep.params->n) + " m=" + std::to_string(rep.params->m) +
           " K=" + std::to_string(rep.params->K) + " c=" + rep.params->c + "\n";
  for (const auto& r : rep.checks) out += text_line(r) + "\n";
  out += std::to_string(rep.checks.size() - rep.failures()) + "/" + std::to_string(rep.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace twy
