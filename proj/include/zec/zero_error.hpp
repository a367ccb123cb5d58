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

#include "zec/channel.hpp"
#include "zec/linalg.hpp"
#include "zec/two_design.hpp"

namespace zec {

/// Block norm above which an alpha/beta block counts as nonzero.
inline constexpr double kBlockTol = 1e-8;
/// Threshold for an output overlap to count as zero.
inline constexpr double kOverlapTol = 1e-8;

/// d x d matrix with a_ii = 1 and a_ik = -1/(d^2 - 1) off the diagonal.
ComplexMatrix a_coefficients(std::size_t d);

/// A = sum_{i,k} |i><k| (x) (a_ik (I - Phi) + Phi), dims (d, d, d).
ComplexMatrix build_A(std::size_t d);

/// E_j A^(j), A^(j) = sum_{i,k} |i><k| (x) g_j^dagger Z_{k-i} g_j (x) (g_j^dagger Z_{k-i} g_j)^c.
ComplexMatrix average_A_over_design(const UnitaryFamily& f);

/// I (x) (I - Phi) + |nu><nu| (x) Phi with |nu> the uniform superposition.
ComplexMatrix a_support_projector(std::size_t d);

/// |x> = sum_i |i>|alpha_i>|beta_i^c> on dims (d^n, d^n, d^n).
PureState build_x(const BlockStateVector& psi1, const BlockStateVector& psi2);

/// <x| A^{(x)n} |x>, contracted factor by factor without forming A^{(x)n}.
double overlap_via_A(const BlockStateVector& psi1, const BlockStateVector& psi2);

/// True iff for every tuple at most one of alpha_i, beta_i has norm above block_tol.
bool disjoint_support(const BlockStateVector& psi1, const BlockStateVector& psi2,
                      double block_tol = kBlockTol);

struct Lemma1Result {
  double overlap = 0.0;     // tr[N(psi1) N(psi2)] in A-form
  double pm_overlap = 0.0;  // tr[N(psi+) N(psi-)], psi+- = (psi1 +- psi2)/sqrt(2)
  bool orthogonal = false;
  bool pm_orthogonal = false;
  /// Some input or the sum/difference vector is zero.
  bool degenerate = false;

  /// Both conditions hold, i.e. the pair would carry a qubit without error.
  bool transmits_qubit() const { return orthogonal && pm_orthogonal; }
};

/// The two single-use zero-error conditions applied to N_d^{(x)n}.
Lemma1Result lemma1_criterion(const BlockStateVector& psi1, const BlockStateVector& psi2,
                              double tol = kOverlapTol);

struct OrthogonalityReport {
  double overlap_value = 0.0;  // E_j tr(rho_j sigma_j) from channel branches
  double a_form_value = 0.0;   // <x|A^{(x)n}|x>
  bool disjoint_support = false;
  bool agree = false;
};

/// Cross-checks the branch route against the A-form route for one pair.
OrthogonalityReport orthogonality_report(const NdChannel& c, const BlockStateVector& psi1,
                                         const BlockStateVector& psi2, double tol = kOverlapTol);

}  // namespace zec
