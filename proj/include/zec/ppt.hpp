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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zec/linalg.hpp"

namespace zec {

// Operators here act on n pairs of d-dimensional factors ordered
// (A_1, B_1, A_2, B_2, ...). A label is a bitmask over the pairs: bit
// (n - 1 - t) set means pair t carries I - Phi, clear means Phi.

/// Partial transpose on every A factor.
ComplexMatrix pair_partial_transpose(const ComplexMatrix& m, std::size_t n);
/// (x)_t (Phi or I - Phi) for the given label.
ComplexMatrix label_operator(std::uint32_t label, std::size_t d, std::size_t n);
bool label_has_rest(std::uint32_t label, std::size_t n, std::size_t pair);
std::uint32_t all_rest_label(std::size_t n);

/// Coefficients of m after isotropic twirling onto span{Phi, I - Phi}^{(x)n}.
struct IsotropicDecomposition {
  std::size_t d = 0;
  std::size_t n = 0;
  /// Indexed by label.
  std::vector<double> coefficients;

  double coefficient(std::uint32_t label) const { return coefficients.at(label); }
  /// sum_s p_s (x) s.
  ComplexMatrix reconstruct() const;
};

/// p_s = tr(m (x)s) / prod rank(s_t). Requires m PSD within tol * ||m||.
IsotropicDecomposition isotropic_twirl_n(const ComplexMatrix& m, std::size_t d, std::size_t n,
                                         double tol = kDefaultTol);

/// Q = sum_{i != j} |ij><ij| with tr(Q Phi^Gamma) = 0 and r = tr(Q) = d^2 - d.
struct WitnessQ {
  std::size_t d = 0;
  ComplexMatrix q;
  double r = 0.0;
};

WitnessQ build_witness_q(std::size_t d);

/// One step of the recursive replay: contract N^Gamma with Q on the pairs
/// where `label` carries I - Phi.
struct RecursionStep {
  std::uint32_t label = 0;
  std::size_t rest_count = 0;
  double coefficient = 0.0;
  /// Minimum eigenvalue of the contracted operator; negative certifies N is not PPT.
  double contraction_min_eigenvalue = 0.0;
  /// Max deviation of the contraction from r^c sum_{s'} p_{s'} (x) s'^Gamma.
  double algebra_residual = 0.0;
  bool forced_zero = false;
  bool violation = false;
};

struct RecursionCertificate {
  std::vector<RecursionStep> steps;
  /// Every coefficient is <= tol: the twirled source must be zero.
  bool certified = false;
  /// Some contraction has a negative eigenvalue: the source is not PPT.
  bool contradiction = false;
  /// Each step is either forced to zero or preceded by a witnessed violation.
  bool consistent = false;
};

/// Replays the recursion over the number of I - Phi factors, from n - 1 down
/// to 0. Throws if the all-(I - Phi) coefficient is not ~0.
RecursionCertificate recursion_certificate(const IsotropicDecomposition& dec, const WitnessQ& q,
                                           double tol = kDefaultTol);

/// tr(m (I - Phi)^{(x)n}) / tr(m) if m is PSD and PPT within tol, else nullopt.
std::optional<double> score_candidate(const ComplexMatrix& m, std::size_t d, std::size_t n,
                                      double tol = kDefaultTol);

/// Alternating eigenvalue clipping on M and M^Gamma. On success returns a
/// trace-one matrix that is PSD and PPT.
std::optional<ComplexMatrix> project_to_ppt(const ComplexMatrix& m, std::size_t n,
                                            std::size_t max_iterations = 200);

struct SearchResult {
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t accepted = 0;
  std::size_t skipped = 0;
  /// Minimum of tr(M (I - Phi)^{(x)n}) over accepted candidates; +inf if none.
  double min_value = 0.0;
};

/// Random PPT candidates; half are drawn near the orthogonal complement of
/// (I - Phi)^{(x)n} to push the score down.
SearchResult counterexample_search(std::size_t d, std::size_t n, std::size_t trials,
                                   std::uint64_t seed);

}  // namespace zec
