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
#include <optional>
#include <span>
#include <vector>

#include "zec/linalg.hpp"

namespace zec {

/// Finite weighted set of d x d unitaries, each phase-canonicalized.
/// `verified` is only set by verify_two_design.
struct UnitaryFamily {
  std::size_t d = 0;
  std::vector<ComplexMatrix> members;
  std::vector<double> weights;
  bool verified = false;

  std::size_t size() const { return members.size(); }
};

/// Outcome of the exactness checks on a family.
struct DesignCheck {
  bool unitary = false;
  bool phase_distinct = false;
  bool weights_normalized = false;
  double frame_potential = 0.0;
  bool passed = false;
};

inline constexpr std::size_t kDefaultClosureCap = 20000;

/// Scales `u` so its first nonzero entry (row-major) is real positive.
ComplexMatrix phase_canonicalize(const ComplexMatrix& u);
/// Entries rounded to 10 decimals; equal keys mean equal up to global phase
/// once both matrices are canonical.
std::vector<long long> dedup_key(const ComplexMatrix& canonical);

/// Qudit phase gate: diag(1, i) for d = 2, diag(omega^{j(j-1)/2}) for odd d.
ComplexMatrix clifford_phase_gate(std::size_t d);

/// Closure of `generators` under multiplication modulo global phase, uniform
/// weights, unverified. Throws when the closure exceeds `size_cap`.
UnitaryFamily multiplicative_closure(std::size_t d, std::span<const ComplexMatrix> generators,
                                     std::size_t size_cap = kDefaultClosureCap);

/// Single-qudit Clifford group for d in {2, 3}, verified as an exact 2-design.
UnitaryFamily enumerate_clifford(std::size_t d, std::size_t size_cap = kDefaultClosureCap);

/// sum_{j,k} w_j w_k |tr(g_j^dagger g_k)|^4; equals 2 exactly for 2-designs.
double frame_potential(const UnitaryFamily& f);

DesignCheck check_two_design(const UnitaryFamily& f, double tol = kDefaultTol);
/// Runs check_two_design and sets f.verified accordingly.
DesignCheck verify_two_design(UnitaryFamily& f, double tol = kDefaultTol);

/// E_j (g_j (x) g_j^c)^dagger m (g_j (x) g_j^c) by direct weighted summation.
ComplexMatrix conjugate_twirl(const UnitaryFamily& f, const ComplexMatrix& m);

/// tr(m Phi) Phi + tr(m (I - Phi)) / (d^2 - 1) (I - Phi): the image of m under
/// any exact 2-design conjugate twirl.
ComplexMatrix isotropic_projection(const ComplexMatrix& m, std::size_t d);

/// Smallest proper subgroup of `f` generated by at most two members that is
/// itself an exact 2-design, if any. The result is verified.
std::optional<UnitaryFamily> find_smaller_design(const UnitaryFamily& f,
                                                 double tol = kDefaultTol);

}  // namespace zec
