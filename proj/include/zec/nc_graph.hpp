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
#include <span>
#include <vector>

#include "zec/channel.hpp"

namespace zec {

/// Membership tolerance, relative in Hilbert-Schmidt norm.
inline constexpr double kMembershipTol = 1e-8;

/// Subspace of operators with a Hilbert-Schmidt orthonormal basis.
struct OperatorSpan {
  Dims dims;
  std::vector<ComplexMatrix> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t ambient_dim() const { return dims_product(dims) * dims_product(dims); }
  ComplexMatrix project(const ComplexMatrix& m) const;
};

/// Orthonormalizes `mats` (modified Gram-Schmidt, two passes). Candidates whose
/// residual falls below `tol` times their norm are dropped.
OperatorSpan span_of(std::span<const ComplexMatrix> mats, const Dims& dims, double tol = 1e-9);
OperatorSpan full_matrix_space(const Dims& dims);

/// Kraus operators sqrt(w_V) Z_k (x) <k|V of N_d as d x d^2 maps, one per (V, k),
/// listed with V major. The classical flags are left implicit.
std::vector<ComplexMatrix> kraus_operators(const NdChannel& c);

/// span{V^dagger |l><k| V : V in the design} for fixed k, l.
OperatorSpan factor_span(const NdChannel& c, std::size_t k, std::size_t l);

/// G(N_d) = span{Z_{k-l} (x) V^dagger |l><k| V}.
OperatorSpan graph_span(const NdChannel& c);

/// ||m - proj(m)||_HS <= tol ||m||_HS.
bool contains(const OperatorSpan& s, const ComplexMatrix& m, double tol = kMembershipTol);

struct ConditionVerdict {
  /// Z (x) I is outside the span, so no d^2-dimensional commutative
  /// *-subalgebra fits inside it.
  bool a_violated = false;
  /// (I (x) Z)(Z (x) Z^dagger) = Z (x) I leaves the span although both factors are in it.
  bool b_violated = false;
};

ConditionVerdict condition_checks(const OperatorSpan& s, std::size_t d,
                                  double tol = kMembershipTol);

}  // namespace zec
