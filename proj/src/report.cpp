// Copyright 2026 The zecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "zec/verify.hpp"

namespace zec {
namespace {

using nlohmann::json;

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

const char* format_name(ReportFormat f) { return f == ReportFormat::kJson ? "json" : "text"; }

json config_json(const RunConfig& c) {
  json j;
  j["d"] = c.d;
  j["n"] = c.n;
  j["suites"] = c.suites;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["cache_dir"] = c.cache_dir ? json(*c.cache_dir) : json(nullptr);
  j["output"] = c.output;
  j["format"] = format_name(c.format);
  return j;
}

RunConfig config_from(const json& j) {
  RunConfig c;
  c.d = j.at("d").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
  c.suites = j.at("suites").get<std::vector<std::string>>();
  c.trials = j.at("trials").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tol = j.at("tol").get<double>();
  if (!j.at("cache_dir").is_null()) c.cache_dir = j.at("cache_dir").get<std::string>();
  c.output = j.at("output").get<std::string>();
  auto f = j.at("format").get<std::string>();
  if (f != "json" && f != "text") throw Error("report: unknown format '" + f + "'");
  c.format = f == "json" ? ReportFormat::kJson : ReportFormat::kText;
  return c;
}

std::string text_report(const VerificationReport& r) {
  std::ostringstream out;
  const auto& c = r.config;
  out << "zec " << r.toolkit_version << "  d=" << c.d << " n=" << c.n << " trials=" << c.trials
      << " seed=" << c.seed << " tol=" << c.tol << "\n";
  std::size_t passed = 0, total = 0;
  for (const auto& s : r.suites) {
    for (const auto& cl : s.claims) {
      ++total;
      passed += cl.passed;
      char line[160];
      std::snprintf(line, sizeof line, "%s  %-44s measured=%-12.6g tol=%-8.3g %9.1f ms",
                    cl.passed ? "PASS" : "FAIL", cl.id.c_str(), cl.measured, cl.tolerance,
                    cl.runtime_ms);
      out << line;
      if (!cl.passed) out << "\n      claim: " << cl.anchor;
      if (!cl.note.empty()) out << "\n      note: " << cl.note;
      out << "\n";
    }
  }
  if (!r.warning.empty()) out << "warning: " << r.warning << "\n";
  out << (r.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << " (" << passed << "/" << total
      << " claims)\n";
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::kText) return text_report(r);
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = r.toolkit_version;
  j["config"] = config_json(r.config);
  j["overall_pass"] = r.overall_pass;
  j["warning"] = r.warning;
  j["suites"] = json::array();
  for (const auto& s : r.suites) {
    json js;
    js["suite"] = s.suite;
    js["claims"] = json::array();
    for (const auto& c : s.claims) {
      js["claims"].push_back({{"id", c.id},
                              {"anchor", c.anchor},
                              {"passed", c.passed},
                              {"measured", number_or_null(c.measured)},
                              {"tolerance", number_or_null(c.tolerance)},
                              {"runtime_ms", c.runtime_ms},
                              {"note", c.note}});
    }
    j["suites"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error("report: unsupported schema version");
    }
    VerificationReport r;
    r.toolkit_version = j.at("toolkit_version").get<std::string>();
    r.config = config_from(j.at("config"));
    r.overall_pass = j.at("overall_pass").get<bool>();
    r.warning = j.at("warning").get<std::string>();
    for (const auto& js : j.at("suites")) {
      SuiteResult s;
      s.suite = js.at("suite").get<std::string>();
      for (const auto& jc : js.at("claims")) {
        ClaimResult c;
        c.id = jc.at("id").get<std::string>();
        c.anchor = jc.at("anchor").get<std::string>();
        c.passed = jc.at("passed").get<bool>();
        c.measured = number_from(jc.at("measured"));
        c.tolerance = number_from(jc.at("tolerance"));
        c.runtime_ms = jc.at("runtime_ms").get<double>();
        c.note = jc.at("note").get<std::string>();
        s.claims.push_back(std::move(c));
      }
      r.suites.push_back(std::move(s));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("report: malformed JSON: ") + e.what());
  }
}

}  // namespace zec
