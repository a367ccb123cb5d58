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
#include <vector>

#include "zec/linalg.hpp"
#include "zec/two_design.hpp"

namespace zec {

/// A tuple (i_1, ..., i_n) of basis or design indices.
using Tuple = std::vector<std::size_t>;

/// Flat index of a base-`base` tuple, leftmost entry most significant.
std::size_t flatten_tuple(const Tuple& t, std::size_t base);
Tuple unflatten_tuple(std::size_t index, std::size_t base, std::size_t n);
std::size_t int_pow(std::size_t base, std::size_t exp);

/// The channel N_d: V from an exact 2-design on A2, then the controlled phase
/// P = sum_{ij} omega^{ij} |i><i| (x) |j><j| on A1 A2. Bob keeps A1 and a copy
/// of the label of V, the environment keeps A2 and another copy.
struct NdChannel {
  std::size_t d = 0;
  UnitaryFamily design;
  ComplexMatrix phase_gate;
  /// Z^l for l = 0..d-1.
  std::vector<ComplexMatrix> z_powers;

  /// Z_l with l taken mod d.
  const ComplexMatrix& z(long long l) const;
  std::size_t num_labels(std::size_t n) const { return int_pow(design.size(), n); }
};

NdChannel build_channel(std::size_t d, UnitaryFamily f);

/// Pure input for n uses, stored as one A2^n block per A1^n basis tuple:
/// |psi> = sum_i |i_1..i_n> |alpha_{i_1..i_n}>.
class BlockStateVector {
 public:
  BlockStateVector() = default;
  /// Zero vector.
  BlockStateVector(std::size_t d, std::size_t n);
  /// Splits a vector on A1^n (x) A2^n.
  static BlockStateVector from_state(const PureState& full, std::size_t d, std::size_t n);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_dim() const { return int_pow(d_, n_); }

  const Eigen::VectorXcd& block(std::size_t flat) const { return blocks_.at(flat); }
  Eigen::VectorXcd& block(std::size_t flat) { return blocks_.at(flat); }
  const Eigen::VectorXcd& block(const Tuple& t) const { return block(flatten_tuple(t, d_)); }
  Eigen::VectorXcd& block(const Tuple& t) { return block(flatten_tuple(t, d_)); }

  /// Vector on A1^n (x) A2^n with dims (d, ..., d).
  PureState to_state() const;
  double norm() const;
  BlockStateVector normalized() const;
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }

  BlockStateVector& operator+=(const BlockStateVector& rhs);
  BlockStateVector& operator-=(const BlockStateVector& rhs);
  BlockStateVector& operator*=(cplx s);
  friend BlockStateVector operator+(BlockStateVector a, const BlockStateVector& b) { return a += b; }
  friend BlockStateVector operator-(BlockStateVector a, const BlockStateVector& b) { return a -= b; }
  friend BlockStateVector operator*(cplx s, BlockStateVector a) { return a *= s; }

 private:
  void require_compatible(const BlockStateVector& other) const;

  std::size_t d_ = 0;
  std::size_t n_ = 0;
  std::vector<Eigen::VectorXcd> blocks_;
};

struct CQBranch {
  Tuple label;
  double weight = 0.0;
  ComplexMatrix matrix;
};

/// Classical-quantum output: one weighted quantum branch per classical flag.
struct CQState {
  std::size_t n = 0;
  std::vector<CQBranch> branches;

  /// sum_j w_j tr(branch_j).
  double total_trace() const;
};

/// Bob's output of N_d^{(x)n}. Branch (j_1..j_n) has entry
/// <alpha_i| G^dagger Z_{k-i} G |alpha_k> at row k, column i, G = g_{j_1} (x) ... (x) g_{j_n}.
CQState apply_n(const NdChannel& c, const BlockStateVector& psi);

/// Environment output: branch j is tr_{B^n} of the post-isometry state, i.e.
/// the A2^n state held together with the flag.
CQState apply_complementary_n(const NdChannel& c, const BlockStateVector& psi);

/// sum_j w_j^x w_j^y tr(x_j^dagger y_j): the Hilbert-Schmidt overlap of the
/// block-diagonal embeddings. Only matching labels contribute.
double cq_overlap(const CQState& x, const CQState& y);

}  // namespace zec
