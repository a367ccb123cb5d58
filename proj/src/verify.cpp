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


#include "zec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "zec/channel.hpp"
#include "zec/design_cache.hpp"
#include "zec/nc_graph.hpp"
#include "zec/ppt.hpp"
#include "zec/privacy.hpp"
#include "zec/random.hpp"
#include "zec/samplers.hpp"
#include "zec/two_design.hpp"
#include "zec/zero_error.hpp"

namespace zec {

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::vector<std::string> canonical_suites(const std::vector<std::string>& requested) {
  bool none = false;
  bool all = false;
  std::vector<std::string> out;
  for (const auto& s : requested) {
    if (s == "none") {
      none = true;
    } else if (s == "all") {
      all = true;
    } else if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw UsageError("unknown suite '" + s + "'");
    }
  }
  if (none && requested.size() > 1) throw UsageError("--suite none cannot be combined with other suites");
  if (none) return out;
  for (const auto& s : all_suites()) {
    if (all || std::find(requested.begin(), requested.end(), s) != requested.end()) out.push_back(s);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_env_value(const std::string& key, const std::string& text) {
  T value{};
  if (!CLI::detail::lexical_conversion<T, T>({text}, value)) {
    throw UsageError("invalid value '" + text + "' for " + key);
  }
  return value;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "text") return ReportFormat::kText;
  throw UsageError("unknown format '" + s + "' (expected json or text)");
}

}  // namespace

RunConfig parse_config(std::span<const std::string> args,
                       const std::map<std::string, std::string>& env) {
  RunConfig cfg;
  std::vector<std::string> suites;
  std::string cache_dir;
  std::string format = "json";
  bool no_cache = false;

  CLI::App app{"Zero-error capacity verification toolkit", "zec"};
  app.require_subcommand(1, 1);
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  auto* o_d = verify->add_option("--d", cfg.d, "Qudit dimension (2 or 3)");
  auto* o_n = verify->add_option("--n", cfg.n, "Number of channel uses (1 or 2)");
  auto* o_suite = verify->add_option("--suite", suites, "Suite to run (repeatable; all, none)")
                      ->take_last()
                      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* o_trials = verify->add_option("--trials", cfg.trials, "Random cases per claim");
  auto* o_seed = verify->add_option("--seed", cfg.seed, "Run seed");
  auto* o_tol = verify->add_option("--tol", cfg.tol, "Tolerance for exact identities");
  auto* o_cache = verify->add_option("--cache-dir", cache_dir, "Design cache directory");
  auto* o_no_cache = verify->add_flag("--no-cache", no_cache, "Enumerate designs in memory only");
  auto* o_output = verify->add_option("--output", cfg.output, "Report path ('-' for stdout)");
  auto* o_format = verify->add_option("--format", format, "json or text");
  o_no_cache->excludes(o_cache);

  std::vector<const char*> argv = {"zec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(verify->parsed() ? verify->help() : app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto from_env = [&](CLI::Option* opt, const char* key, auto apply) {
    if (opt->count() > 0) return;
    auto it = env.find(key);
    if (it != env.end() && !it->second.empty()) apply(key, it->second);
  };
  from_env(o_d, "ZEC_D", [&](auto k, auto& v) { cfg.d = parse_env_value<std::size_t>(k, v); });
  from_env(o_n, "ZEC_N", [&](auto k, auto& v) { cfg.n = parse_env_value<std::size_t>(k, v); });
  from_env(o_suite, "ZEC_SUITE", [&](auto, auto& v) { suites = split_list(v); });
  from_env(o_trials, "ZEC_TRIALS",
           [&](auto k, auto& v) { cfg.trials = parse_env_value<std::size_t>(k, v); });
  from_env(o_seed, "ZEC_SEED",
           [&](auto k, auto& v) { cfg.seed = parse_env_value<std::uint64_t>(k, v); });
  from_env(o_tol, "ZEC_TOL", [&](auto k, auto& v) { cfg.tol = parse_env_value<double>(k, v); });
  if (!no_cache) {
    from_env(o_cache, "ZEC_CACHE_DIR", [&](auto, auto& v) { cache_dir = v; });
  }
  from_env(o_output, "ZEC_OUTPUT", [&](auto, auto& v) { cfg.output = v; });
  from_env(o_format, "ZEC_FORMAT", [&](auto, auto& v) { format = v; });

  if (cfg.d != 2 && cfg.d != 3) throw UsageError("unsupported d = " + std::to_string(cfg.d) + " (expected 2 or 3)");
  if (cfg.n != 1 && cfg.n != 2) throw UsageError("unsupported n = " + std::to_string(cfg.n) + " (expected 1 or 2)");
  if (cfg.trials < 1) throw UsageError("trials must be at least 1");
  if (!(cfg.tol > 0) || !std::isfinite(cfg.tol)) throw UsageError("tol must be positive");
  if (!suites.empty()) cfg.suites = canonical_suites(suites);
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  cfg.format = parse_format(format);
  return cfg;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Outcome {
  Outcome(double m, bool p, std::string n = {}) : measured(m), passed(p), note(std::move(n)) {}
  double measured;
  bool passed;
  std::string note;
};

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const RunConfig& cfg) : cfg_(cfg) { result_.suite = std::move(suite); }

  void claim(std::string id, std::string anchor, double tolerance,
             const std::function<Outcome()>& body) {
    ClaimResult c;
    c.id = result_.suite + "." + id;
    c.anchor = std::move(anchor);
    c.tolerance = tolerance;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      c.measured = o.measured;
      c.passed = o.passed;
      c.note = std::move(o.note);
    } catch (const CacheError&) {
      throw;
    } catch (const std::exception& e) {
      c.passed = false;
      c.measured = std::numeric_limits<double>::quiet_NaN();
      c.note = std::string("internal error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    c.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    result_.claims.push_back(std::move(c));
  }

  CounterRng rng(std::uint64_t case_index) const {
    return CounterRng::for_case(cfg_.seed, result_.suite, case_index);
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  const RunConfig& cfg_;
  SuiteResult result_;
};

Outcome at_most(double measured, double tol, std::string note = {}) {
  return {measured, measured <= tol, std::move(note)};
}

Outcome equals_count(double measured, double expected, std::string note = {}) {
  return {measured, measured == expected, std::move(note)};
}

UnitaryFamily clifford_for(const RunConfig& cfg, std::size_t d) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::string>, UnitaryFamily> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(d, cfg.cache_dir.value_or(""));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::optional<std::filesystem::path> dir;
  if (cfg.cache_dir) dir = *cfg.cache_dir;
  auto f = load_or_enumerate_clifford(d, dir);
  memo.emplace(key, f);
  return f;
}

std::size_t expected_clifford_size(std::size_t d) { return d == 2 ? 24 : 216; }

// Pair budget for routes that touch every branch label; the d = 3, n = 2
// branch sum has 216^2 labels per state.
std::size_t branch_pair_budget(const RunConfig& cfg) {
  return (cfg.d == 3 && cfg.n == 2) ? std::min<std::size_t>(cfg.trials, 4) : cfg.trials;
}

double central_identity_gap(const NdChannel& c, const BlockStateVector& a,
                            const BlockStateVector& b) {
  double lhs = cq_overlap(apply_n(c, a), apply_n(c, b)) * static_cast<double>(c.num_labels(a.n()));
  return std::abs(lhs - overlap_via_A(a, b));
}

SuiteResult design_suite(const RunConfig& cfg) {
  SuiteRunner s("design", cfg);
  const std::size_t d = cfg.d;
  UnitaryFamily fam;
  s.claim("enumerate", "Clifford closure of {F, S, X, Z} modulo phase is a verified family", 0,
          [&] {
            fam = clifford_for(cfg, d);
            auto size = static_cast<double>(fam.size());
            return Outcome{size, fam.verified && fam.size() == expected_clifford_size(d),
                           "expected " + std::to_string(expected_clifford_size(d)) + " members"};
          });
  s.claim("frame_potential", "sum_jk w_j w_k |tr(g_j^dag g_k)|^4 = 2", cfg.tol,
          [&] { return at_most(std::abs(frame_potential(fam) - 2.0), cfg.tol); });
  s.claim("group_closure", "canon(g_i g_j) is a member for all i, j", 0, [&] {
    std::map<std::vector<long long>, int> keys;
    for (const auto& g : fam.members) keys.emplace(dedup_key(g), 0);
    double misses = 0;
    for (const auto& a : fam.members) {
      for (const auto& b : fam.members) {
        if (!keys.count(dedup_key(phase_canonicalize(a * b)))) ++misses;
      }
    }
    return equals_count(misses, 0);
  });
  s.claim("twirl_clock", "E_j (g (x) g^c)^dag (Z_a (x) Z_a^c) (g (x) g^c) = -(I-Phi)/(d^2-1) + Phi",
          cfg.tol, [&] {
            ComplexMatrix phi = max_entangled_projector(d);
            ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
            ComplexMatrix expected = phi - (1.0 / static_cast<double>(d * d - 1)) * rest;
            double worst = 0.0;
            for (std::size_t a = 1; a < d; ++a) {
              ComplexMatrix za = clock_power(d, static_cast<long long>(a));
              worst = std::max(worst, conjugate_twirl(fam, tensor_product(za, za.conjugate()))
                                          .max_abs_diff(expected));
            }
            return at_most(worst, cfg.tol);
          });
  s.claim("twirl_basis",
          "E_V (V^dag (x) V^T)(|k><k| (x) |l><l|)(...)^dag = (1-delta_kl/d)/(d^2-1) (I-Phi) + delta_kl/d Phi",
          cfg.tol, [&] {
            ComplexMatrix phi = max_entangled_projector(d);
            ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
            double dd = static_cast<double>(d);
            double worst = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
              for (std::size_t l = 0; l < d; ++l) {
                double delta = k == l ? 1.0 : 0.0;
                ComplexMatrix expected =
                    ((1.0 - delta / dd) / (dd * dd - 1.0)) * rest + (delta / dd) * phi;
                ComplexMatrix m = tensor_product(ket_bra(d, k, k), ket_bra(d, l, l));
                worst = std::max(worst, conjugate_twirl(fam, m).max_abs_diff(expected));
              }
            }
            return at_most(worst, cfg.tol);
          });
  s.claim("twirl_invariance", "twirl(M) is idempotent, commutes with every g (x) g^c and matches the closed form",
          cfg.tol, [&] {
            double worst = 0.0;
            for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 10); ++t) {
              auto rng = s.rng(t);
              ComplexMatrix m = random_density_matrix(rng, Dims{d, d}, d * d);
              ComplexMatrix tw = conjugate_twirl(fam, m);
              worst = std::max(worst, conjugate_twirl(fam, tw).max_abs_diff(tw));
              worst = std::max(worst, isotropic_projection(m, d).max_abs_diff(tw));
              for (const auto& g : fam.members) {
                ComplexMatrix u = tensor_product(g, g.conjugate());
                worst = std::max(worst, (u * tw).max_abs_diff(tw * u));
              }
            }
            return at_most(worst, cfg.tol);
          });
  return s.finish();
}

SuiteResult channel_suite(const RunConfig& cfg) {
  SuiteRunner s("channel", cfg);
  const std::size_t d = cfg.d, n = cfg.n;
  NdChannel ch = build_channel(d, clifford_for(cfg, d));
  s.claim("phase_gate", "P = sum_ij omega^ij |i><i| (x) |j><j| = sum_i |i><i| (x) Z_i", cfg.tol, [&] {
    ComplexMatrix alt = ComplexMatrix::zero(Dims{d, d});
    for (std::size_t i = 0; i < d; ++i) {
      alt += tensor_product(ket_bra(d, i, i), ch.z(static_cast<long long>(i)));
    }
    double gap = ch.phase_gate.max_abs_diff(alt);
    bool ok = gap <= cfg.tol && ch.phase_gate.is_unitary(cfg.tol) &&
              ch.z(static_cast<long long>(d)).max_abs_diff(ch.z(0)) <= cfg.tol;
    return Outcome{gap, ok};
  });

  const std::size_t budget = branch_pair_budget(cfg);
  s.claim("trace_and_positivity", "branches are PSD and sum_j w_j tr(branch_j) = 1 for N and N^c",
          cfg.tol, [&] {
            double worst = 0.0;
            for (std::size_t t = 0; t < budget; ++t) {
              auto rng = s.rng(t);
              auto psi = random_block_state(rng, d, n);
              for (const auto& out : {apply_n(ch, psi), apply_complementary_n(ch, psi)}) {
                worst = std::max(worst, std::abs(out.total_trace() - 1.0));
                for (const auto& br : out.branches) {
                  worst = std::max(worst, -min_eigenvalue(br.matrix));
                }
              }
            }
            return at_most(worst, cfg.tol, std::to_string(budget) + " random inputs");
          });
  s.claim("classical_inputs", "N_d(|i><i| (x) I/d) = |i><i| on every branch", cfg.tol, [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<ComplexMatrix> avg;
      for (std::size_t b = 0; b < d; ++b) {
        BlockStateVector psi(d, 1);
        psi.block(i)(static_cast<Eigen::Index>(b)) = 1.0;
        auto out = apply_n(ch, psi);
        if (avg.empty()) avg.assign(out.branches.size(), ComplexMatrix::zero(Dims{d}));
        for (std::size_t j = 0; j < out.branches.size(); ++j) {
          avg[j] += (1.0 / static_cast<double>(d)) * out.branches[j].matrix;
        }
      }
      ComplexMatrix target = ket_bra(d, i, i);
      for (const auto& m : avg) worst = std::max(worst, m.max_abs_diff(target));
    }
    return at_most(worst, cfg.tol);
  });
  s.claim("central_identity", "m^n sum_j w_j^2 tr(rho_j sigma_j) = <x|A^(x)n|x>", kOverlapTol, [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < budget; ++t) {
      auto rng = s.rng(1000 + t);
      auto [a, b] = sample_pair(rng, d, n, t % 2 == 0 ? PairKind::kRandom : pair_kind_at(t));
      worst = std::max(worst, central_identity_gap(ch, a, b));
    }
    return at_most(worst, kOverlapTol, std::to_string(budget) + " pairs");
  });
  s.claim("design_independence", "A and the central identity are unchanged under another exact 2-design",
          kOverlapTol, [&] {
            if (d != 2) {
              return Outcome{0.0, true, "skipped: alternative design search runs for d = 2 only"};
            }
            auto sub = find_smaller_design(ch.design, cfg.tol);
            if (!sub) return Outcome{0.0, true, "skipped: no smaller exact 2-design found"};
            NdChannel alt = build_channel(d, *sub);
            double worst = average_A_over_design(*sub).max_abs_diff(build_A(d));
            for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 20); ++t) {
              auto rng = s.rng(2000 + t);
              auto [a, b] = sample_pair(rng, d, n, PairKind::kRandom);
              worst = std::max(worst, central_identity_gap(alt, a, b));
            }
            return at_most(worst, kOverlapTol,
                           "alternative design with " + std::to_string(sub->size()) + " members");
          });
  return s.finish();
}

SuiteResult zero_error_suite(const RunConfig& cfg) {
  SuiteRunner s("zero-error", cfg);
  const std::size_t d = cfg.d, n = cfg.n;
  const ComplexMatrix a = build_A(d);
  s.claim("a_closed_form", "E_j A^(j) = sum_ik |i><k| (x) (a_ik (I-Phi) + Phi)", cfg.tol, [&] {
    return at_most(average_A_over_design(clifford_for(cfg, d)).max_abs_diff(a), cfg.tol);
  });
  s.claim("support_projector", "supp(A) projector = I (x) (I-Phi) + |nu><nu| (x) Phi", cfg.tol, [&] {
    auto [support, null] = support_null(a, cfg.tol);
    return at_most(support.projector().max_abs_diff(a_support_projector(d)), cfg.tol);
  });
  s.claim("null_dimension", "dim null(A) = d - 1", 0, [&] {
    auto [support, null] = support_null(a, cfg.tol);
    return equals_count(static_cast<double>(null.dim()), static_cast<double>(d - 1));
  });
  s.claim("null_vectors", "A |mu>|Phi> = 0 whenever <mu|nu> = 0", 1e-10, [&] {
    double worst = 0.0;
    PureState phi = max_entangled_state(d);
    for (std::size_t k = 1; k < d; ++k) {
      // mu_k = F|k> is orthogonal to nu = F|0>.
      PureState mu(fourier_matrix(d).data().col(static_cast<Eigen::Index>(k)), Dims{d});
      PureState v = tensor_product(mu, phi);
      worst = std::max(worst, (a.data() * v.amplitudes()).norm());
    }
    return at_most(worst, 1e-10);
  });
  s.claim("a_dominates", "A >= c I (x) (I-Phi) with c = d/(d+1) = min eig of sum_ik a_ik |i><k|", cfg.tol,
          [&] {
            ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - max_entangled_projector(d);
            ComplexMatrix floor = tensor_product(ComplexMatrix::identity(Dims{d}), rest);
            double c = static_cast<double>(d) / static_cast<double>(d + 1);
            double lam = min_eigenvalue(a - c * floor);
            double unit = min_eigenvalue(a - floor);
            std::ostringstream note;
            note << "with c = 1 the minimum eigenvalue is " << unit << " = -1/(d+1)";
            return at_most(std::max(0.0, -lam), cfg.tol, note.str());
          });
  s.claim("support_overlap_equivalence",
          "<x|A^(x)n|x> <= 1e-8 iff at most one of alpha_i, beta_i is nonzero for every i", 0, [&] {
            double discrepancies = 0;
            const std::size_t random_pairs = 2 * cfg.trials;
            const std::size_t structured_pairs = std::max<std::size_t>(cfg.trials, 50);
            for (std::size_t t = 0; t < random_pairs + structured_pairs; ++t) {
              auto rng = s.rng(t);
              PairKind kind = t < random_pairs ? PairKind::kRandom : pair_kind_at(t);
              auto [p1, p2] = sample_pair(rng, d, n, kind);
              bool zero = std::abs(overlap_via_A(p1, p2)) <= kOverlapTol;
              if (zero != disjoint_support(p1, p2)) ++discrepancies;
            }
            return equals_count(discrepancies, 0,
                                std::to_string(random_pairs) + " random + " +
                                    std::to_string(structured_pairs) + " structured pairs");
          });
  s.claim("overlap_symmetry", "<x|A^(x)n|x> is symmetric in the pair and scales as |c|^2", 1e-10, [&] {
    double worst = 0.0;
    for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 20); ++t) {
      auto rng = s.rng(5000 + t);
      auto [p1, p2] = sample_pair(rng, d, n, PairKind::kRandom);
      double v12 = overlap_via_A(p1, p2);
      worst = std::max(worst, std::abs(v12 - overlap_via_A(p2, p1)));
      cplx c(0.3 * rng.normal(), 0.3 * rng.normal());
      worst = std::max(worst, std::abs(overlap_via_A(c * p1, p2) - std::norm(c) * v12));
    }
    return at_most(worst, 1e-10);
  });
  return s.finish();
}

SuiteResult theorem2_suite(const RunConfig& cfg) {
  SuiteRunner s("theorem2", cfg);
  const std::size_t d = cfg.d, n = cfg.n;
  const std::size_t candidates = 5 * cfg.trials;
  std::size_t near_misses = 0;
  double codes = 0, forcing_failures = 0;
  s.claim("no_qubit_code", "no pair of nonzero inputs meets both single-use zero-error conditions",
          0, [&] {
            for (std::size_t t = 0; t < candidates; ++t) {
              auto rng = s.rng(t);
              auto [p1, p2] = sample_pair(rng, d, n, pair_kind_at(t));
              auto r = lemma1_criterion(p1, p2);
              if (r.transmits_qubit() && !r.degenerate) ++codes;
              if (r.orthogonal && !r.degenerate) {
                ++near_misses;
                // Forcing: alpha_i + beta_i and alpha_i - beta_i are both nonzero on every
                // occupied tuple, so the second condition must fail.
                const double s2 = 1.0 / std::sqrt(2.0);
                BlockStateVector plus = s2 * (p1 + p2), minus = s2 * (p1 - p2);
                bool forced = !disjoint_support(plus, minus) && !r.pm_orthogonal;
                for (std::size_t i = 0; i < p1.num_blocks(); ++i) {
                  bool occupied = p1.block(i).norm() > kBlockTol || p2.block(i).norm() > kBlockTol;
                  if (occupied && (plus.block(i).norm() <= kBlockTol || minus.block(i).norm() <= kBlockTol)) {
                    forced = false;
                  }
                }
                if (!forced) ++forcing_failures;
              }
            }
            return equals_count(codes, 0, std::to_string(candidates) + " candidate pairs");
          });
  s.claim("forcing_on_near_misses", "orthogonal outputs force alpha_i +- beta_i both nonzero, so psi+- overlap",
          0, [&] {
            return equals_count(forcing_failures, 0,
                                std::to_string(near_misses) + " near-miss pairs");
          });
  s.claim("degenerate_zero_pair", "psi1 = psi2 = 0 passes trivially and is flagged degenerate", 0, [&] {
    BlockStateVector z(d, n);
    auto r = lemma1_criterion(z, z);
    return Outcome{r.overlap, r.transmits_qubit() && r.degenerate};
  });
  s.claim("branch_route_agrees", "Orthogonality verdicts agree between channel branches and the A-form",
          kOverlapTol, [&] {
            NdChannel ch = build_channel(d, clifford_for(cfg, d));
            double worst = 0.0;
            const std::size_t budget = branch_pair_budget(cfg) / 2 + 1;
            const double s2 = 1.0 / std::sqrt(2.0);
            for (std::size_t t = 0; t < budget; ++t) {
              auto rng = s.rng(10000 + t);
              auto [p1, p2] = sample_pair(rng, d, n, pair_kind_at(t));
              worst = std::max(worst, central_identity_gap(ch, p1, p2));
              worst = std::max(worst, central_identity_gap(ch, s2 * (p1 + p2), s2 * (p1 - p2)));
            }
            return at_most(worst, kOverlapTol, std::to_string(budget) + " pairs");
          });
  return s.finish();
}

SuiteResult privacy_suite(const RunConfig& cfg) {
  SuiteRunner s("privacy", cfg);
  const std::size_t d = cfg.d;
  NdChannel ch = build_channel(d, clifford_for(cfg, d));
  constexpr double kExact = 1e-12;
  s.claim("transpose_trick", "(I (x) V)|Phi> = (V^T (x) I)|Phi> for every design member", kExact, [&] {
    double worst = 0.0;
    for (const auto& g : ch.design.members) worst = std::max(worst, transpose_trick_check(g));
    return at_most(worst, kExact);
  });
  std::vector<ProtocolTranscript> transcripts;
  s.claim("correctness", "N_d(|i><i| (x) I/d) = |i><i|: Bob decodes every message exactly", kExact, [&] {
    double worst = 0.0;
    bool decoded_all = true;
    for (std::size_t msg = 0; msg < d; ++msg) {
      transcripts.push_back(run_protocol(ch, msg));
      worst = std::max(worst, transcripts.back().bob_error);
      decoded_all = decoded_all && transcripts.back().decoded == msg;
    }
    return Outcome{worst, decoded_all && worst <= kExact};
  });
  s.claim("secrecy", "environment output (E, flag) is independent of the message", kExact, [&] {
    return at_most(verify_secrecy(transcripts), kExact);
  });
  s.claim("rate", "one of d messages per use with zero error: log2 d bits", 0, [&] {
    double bits = std::log2(static_cast<double>(d));
    bool ok = transcripts.size() == d;
    for (const auto& t : transcripts) ok = ok && t.decoded == t.message && t.bob_error <= kExact;
    return Outcome{bits, ok};
  });
  s.claim("control_leaks", "a product A2 input makes the environment message-dependent", 0, [&] {
    std::vector<ProtocolTranscript> leaky;
    PureState product = PureState::basis(Dims{d, d}, 0);
    for (std::size_t msg = 0; msg < d; ++msg) leaky.push_back(run_protocol(ch, msg, product));
    double leak = verify_secrecy(leaky);
    return Outcome{leak, leak > 1e-3};
  });
  return s.finish();
}

SuiteResult ppt_suite(const RunConfig& cfg) {
  SuiteRunner s("ppt", cfg);
  const std::size_t d = cfg.d, n = cfg.n;
  s.claim("witness", "Q = sum_{i!=j} |ij><ij| >= 0, tr(Q Phi^Gamma) = 0, tr(Q (I-Phi)^Gamma) = tr Q = d^2 - d",
          1e-12, [&] {
            WitnessQ q = build_witness_q(d);
            ComplexMatrix rest_g =
                partial_transpose(ComplexMatrix::identity(Dims{d, d}) - max_entangled_projector(d), 0);
            double gap = std::abs(trace_inner(q.q, rest_g).real() - q.r);
            gap = std::max(gap, std::abs(q.r - static_cast<double>(d * d - d)));
            return at_most(gap, 1e-12);
          });
  s.claim("counterexample_search", "no PSD, PPT M with tr(M (I-Phi)^(x)n) = 0 among random candidates",
          0, [&] {
            const std::size_t side = int_pow(d, 2 * n);
            const std::size_t trials = side > 16 ? std::min<std::size_t>(10 * cfg.trials, 100)
                                                 : std::max<std::size_t>(10 * cfg.trials, 1000);
            std::uint64_t seed = CounterRng::for_case(cfg.seed, "ppt", 0)();
            auto res = counterexample_search(d, n, trials, seed);
            std::string note = std::to_string(res.accepted) + " accepted, " +
                               std::to_string(res.skipped) + " skipped of " +
                               std::to_string(res.trials);
            bool ok = res.accepted > 0 && res.min_value > 0;
            return Outcome{res.accepted > 0 ? res.min_value : 0.0, ok, note};
          });
  s.claim("twirl_preserves_ppt", "isotropic twirl keeps trace, positivity and positive partial transpose",
          cfg.tol, [&] {
            double worst = 0.0;
            for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 20); ++t) {
              auto rng = s.rng(t);
              ComplexMatrix m = random_density_matrix(rng, Dims(2 * n, d), int_pow(d, 2 * n));
              auto ppt = project_to_ppt(m, n);
              if (!ppt) continue;
              auto dec = isotropic_twirl_n(*ppt, d, n);
              ComplexMatrix rec = dec.reconstruct();
              worst = std::max(worst, std::abs(rec.trace().real() - 1.0));
              worst = std::max(worst, -min_eigenvalue(rec));
              worst = std::max(worst, -min_eigenvalue(pair_partial_transpose(rec, n)));
            }
            return at_most(worst, cfg.tol);
          });
  s.claim("recursion_certificate",
          "on constrained twirled inputs every coefficient is forced to 0 or PPT fails visibly", 0, [&] {
            WitnessQ q = build_witness_q(d);
            const Dims dims(2 * n, d);
            const ComplexMatrix complement =
                ComplexMatrix::identity(dims) - label_operator(all_rest_label(n), d, n);
            double failures = 0;
            std::size_t instances = 0;
            for (std::size_t t = 0; t < std::min<std::size_t>(cfg.trials, 50); ++t) {
              auto rng = s.rng(100 + t);
              ComplexMatrix m = random_density_matrix(rng, dims, 1 + rng.below(int_pow(d, 2 * n)));
              m = complement * m * complement;
              auto dec = isotropic_twirl_n(m, d, n);
              auto cert = recursion_certificate(dec, q);
              bool is_ppt = min_eigenvalue(pair_partial_transpose(dec.reconstruct(), n)) >= -cfg.tol;
              bool nonzero = dec.reconstruct().frobenius_norm() > cfg.tol;
              bool ok = cert.consistent && (cert.certified || cert.contradiction) &&
                        (!is_ppt || cert.certified) && (cert.contradiction == (nonzero && !is_ppt));
              for (const auto& st : cert.steps) ok = ok && st.algebra_residual <= cfg.tol;
              if (!ok) ++failures;
              ++instances;
            }
            IsotropicDecomposition zero{d, n, std::vector<double>(std::size_t{1} << n, 0.0)};
            auto vac = recursion_certificate(zero, q);
            if (!vac.certified || vac.contradiction) ++failures;
            return equals_count(failures, 0, std::to_string(instances + 1) + " instances");
          });
  return s.finish();
}

SuiteResult ncgraph_suite(const RunConfig& cfg) {
  SuiteRunner s("ncgraph", cfg);
  const std::size_t d = cfg.d;
  NdChannel ch = build_channel(d, clifford_for(cfg, d));
  OperatorSpan g;
  s.claim("factor_span_diagonal", "span{V^dag |k><k| V} is the whole d x d matrix space", 0, [&] {
    double bad = 0;
    for (std::size_t k = 0; k < d; ++k) bad += factor_span(ch, k, k).dim() != d * d;
    return equals_count(bad, 0, "expected dimension " + std::to_string(d * d));
  });
  s.claim("factor_span_offdiagonal", "span{V^dag |l><k| V}, k != l, is the traceless matrices", 0, [&] {
    double bad = 0;
    ComplexMatrix id = ComplexMatrix::identity(Dims{d});
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) {
        if (k == l) continue;
        auto sp = factor_span(ch, k, l);
        bool traceless = true;
        for (const auto& b : sp.basis) traceless = traceless && std::abs(b.trace()) <= cfg.tol;
        if (sp.dim() != d * d - 1 || !traceless) ++bad;
      }
    }
    return equals_count(bad, 0, "expected dimension " + std::to_string(d * d - 1));
  });
  s.claim("graph_dimension", "dim G(N_d) = d^2 + (d-1)(d^2-1)", 0, [&] {
    g = graph_span(ch);
    return equals_count(static_cast<double>(g.dim()),
                        static_cast<double>(d * d + (d - 1) * (d * d - 1)));
  });
  s.claim("kraus_products", "G(N_d) equals span{E_i^dag E_j} over the Kraus operators", 0, [&] {
    auto kraus = kraus_operators(ch);
    std::vector<ComplexMatrix> products;
    // Operators with different flags multiply to zero, so only same-V pairs contribute.
    for (std::size_t v = 0; v < ch.design.size(); ++v) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          ComplexMatrix p = kraus[v * d + a].adjoint() * kraus[v * d + b];
          products.emplace_back(p.data(), Dims{d, d});
        }
      }
    }
    auto direct = span_of(products, Dims{d, d});
    double bad = direct.dim() != g.dim();
    for (const auto& b : direct.basis) bad += !contains(g, b);
    return equals_count(bad, 0);
  });
  s.claim("excludes_z_i", "Z (x) I is not in G(N_d)", 0, [&] {
    bool in = contains(g, tensor_product(clock_matrix(d), ComplexMatrix::identity(Dims{d})));
    return Outcome{in ? 1.0 : 0.0, !in};
  });
  s.claim("includes_i_z_and_z_zdag", "I (x) Z and Z (x) Z^dag are in G(N_d)", 0, [&] {
    ComplexMatrix z = clock_matrix(d);
    bool in = contains(g, tensor_product(ComplexMatrix::identity(Dims{d}), z)) &&
              contains(g, tensor_product(z, z.adjoint()));
    return Outcome{in ? 0.0 : 1.0, in};
  });
  s.claim("conditions_violated", "G(N_d) has no maximal commutative *-subalgebra and is not an algebra", 0,
          [&] {
            auto v = condition_checks(g, d);
            auto full = condition_checks(full_matrix_space(Dims{d, d}), d);
            bool ok = v.a_violated && v.b_violated && !full.a_violated && !full.b_violated;
            return Outcome{static_cast<double>(v.a_violated) + static_cast<double>(v.b_violated), ok,
                           "measured counts violated conditions"};
          });
  s.claim("adjoint_closed", "G(N_d) is closed under the adjoint", 0, [&] {
    double bad = 0;
    for (const auto& b : g.basis) bad += !contains(g, b.adjoint());
    return equals_count(bad, 0);
  });
  return s.finish();
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const RunConfig& config) {
  try {
    if (suite == "design") return design_suite(config);
    if (suite == "channel") return channel_suite(config);
    if (suite == "zero-error") return zero_error_suite(config);
    if (suite == "theorem2") return theorem2_suite(config);
    if (suite == "privacy") return privacy_suite(config);
    if (suite == "ppt") return ppt_suite(config);
    if (suite == "ncgraph") return ncgraph_suite(config);
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    SuiteResult r{suite, {}};
    ClaimResult c;
    c.id = suite + ".setup";
    c.anchor = "suite setup";
    c.passed = false;
    c.measured = std::numeric_limits<double>::quiet_NaN();
    c.note = std::string("internal error: ") + e.what();
    r.claims.push_back(std::move(c));
    return r;
  }
  throw Error("unknown suite '" + suite + "'");
}

VerificationReport execute(const RunConfig& config) {
  VerificationReport r;
  r.config = config;
  for (const auto& name : all_suites()) {
    if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end()) continue;
    r.suites.push_back(run_suite(name, config));
  }
  r.overall_pass = true;
  for (const auto& s : r.suites) {
    for (const auto& c : s.claims) r.overall_pass = r.overall_pass && c.passed;
  }
  if (r.suites.empty()) r.warning = "no suites selected; overall pass is vacuous";
  return r;
}

VerificationReport without_runtimes(VerificationReport r) {
  for (auto& s : r.suites) {
    for (auto& c : s.claims) c.runtime_ms = 0.0;
  }
  return r;
}

}  // namespace zec
