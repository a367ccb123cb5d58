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


#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zec/linalg.hpp"

namespace zec {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// Suites in execution order.
inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> kSuites = {"design",  "channel", "zero-error", "theorem2",
                                                   "privacy", "ppt",     "ncgraph"};
  return kSuites;
}

enum class ReportFormat { kJson, kText };

/// Bad command line or environment; maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Thrown by parse_config for --help; what() holds the help text.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

struct RunConfig {
  std::size_t d = 2;
  std::size_t n = 1;
  std::vector<std::string> suites = all_suites();
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  std::optional<std::string> cache_dir;
  std::string output = "-";  // "-" is standard output
  ReportFormat format = ReportFormat::kJson;

  bool operator==(const RunConfig&) const = default;
};

struct ClaimResult {
  std::string id;
  /// Short statement of the claim being checked.
  std::string anchor;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  std::string note;

  bool operator==(const ClaimResult&) const = default;
};

struct SuiteResult {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool operator==(const SuiteResult&) const = default;
};

struct VerificationReport {
  std::string toolkit_version = kToolkitVersion;
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool overall_pass = true;
  std::string warning;

  bool operator==(const VerificationReport&) const = default;
};

/// `args` excludes the program name and starts with the subcommand.
/// Precedence: flags, then ZEC_* entries of `env`, then defaults.
RunConfig parse_config(std::span<const std::string> args,
                       const std::map<std::string, std::string>& env);

/// Runs one suite. Randomness is keyed by (seed, suite, case index) so the
/// result does not depend on which other suites run.
SuiteResult run_suite(const std::string& suite, const RunConfig& config);
VerificationReport execute(const RunConfig& config);

std::string emit_report(const VerificationReport& r, ReportFormat format);
VerificationReport parse_report_json(std::string_view text);
/// Copy with every runtime_ms zeroed, for reproducibility comparisons.
VerificationReport without_runtimes(VerificationReport r);

}  // namespace zec
