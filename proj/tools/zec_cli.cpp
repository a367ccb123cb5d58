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


// Command-line front end: `zec verify`, `zec state`, `zec overlap`.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zec/channel.hpp"
#include "zec/design_cache.hpp"
#include "zec/random.hpp"
#include "zec/samplers.hpp"
#include "zec/state_io.hpp"
#include "zec/verify.hpp"
#include "zec/zero_error.hpp"

extern char** environ;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::map<std::string, std::string> environment() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string kv(*e);
    auto eq = kv.find('=');
    if (eq != std::string::npos && kv.rfind("ZEC_", 0) == 0) env[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return env;
}

int write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "zec: cannot write " << path << "\n";
    return kExitInternal;
  }
  return kExitPass;
}

int run_verify(const std::vector<std::string>& args) {
  zec::RunConfig cfg = zec::parse_config(args, environment());
  zec::VerificationReport report = zec::execute(cfg);
  int rc = write_text(cfg.output, zec::emit_report(report, cfg.format));
  if (rc != kExitPass) return rc;
  if (!report.warning.empty()) std::cerr << "zec: warning: " << report.warning << "\n";
  return report.overall_pass ? kExitPass : kExitClaimFailure;
}

zec::BlockStateVector load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zec::UsageError("cannot open " + path);
  return zec::read_block_state(in);
}

int run_tool(const std::vector<std::string>& args) {
  CLI::App app{"Block-state utilities", "zec"};
  app.require_subcommand(1, 1);

  std::size_t d = 2, n = 1;
  std::uint64_t seed = 1, index = 0;
  std::string out = "-";
  auto* state = app.add_subcommand("state", "Write a random block state");
  state->add_option("--d", d)->check(CLI::IsMember({2, 3}));
  state->add_option("--n", n)->check(CLI::IsMember({1, 2}));
  state->add_option("--seed", seed);
  state->add_option("--index", index, "Case index within the seed");
  state->add_option("--output", out);

  std::string first, second, cache_dir;
  auto* overlap = app.add_subcommand("overlap", "Compare the channel outputs of two block states");
  overlap->add_option("first", first)->required();
  overlap->add_option("second", second)->required();
  overlap->add_option("--cache-dir", cache_dir);

  std::vector<const char*> argv = {"zec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  if (state->parsed()) {
    auto rng = zec::CounterRng::for_case(seed, "state", index);
    std::ostringstream text;
    zec::write_block_state(zec::random_block_state(rng, d, n), text);
    return write_text(out, text.str());
  }

  auto a = load_state(first);
  auto b = load_state(second);
  if (a.d() != b.d() || a.n() != b.n()) throw zec::UsageError("states have different shapes");
  std::optional<std::filesystem::path> dir;
  if (!cache_dir.empty()) dir = cache_dir;
  auto ch = zec::build_channel(a.d(), zec::load_or_enumerate_clifford(a.d(), dir));
  auto r = zec::orthogonality_report(ch, a, b);
  std::cout.precision(17);
  std::cout << "branch_overlap   " << r.overlap_value << "\n"
            << "a_form_overlap   " << r.a_form_value << "\n"
            << "disjoint_support " << (r.disjoint_support ? "true" : "false") << "\n"
            << "routes_agree     " << (r.agree ? "true" : "false") << "\n";
  return r.agree ? kExitPass : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (!args.empty() && (args[0] == "state" || args[0] == "overlap")) return run_tool(args);
    return run_verify(args);
  } catch (const zec::HelpRequested& h) {
    std::cout << h.what();
    return kExitPass;
  } catch (const zec::UsageError& e) {
    std::cerr << "zec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zec: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
