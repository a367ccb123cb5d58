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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zec {

using cplx = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Default absolute/relative tolerance for equality claims.
inline constexpr double kDefaultTol = 1e-9;

/// Raised on violated preconditions (shape mismatch, bad factor index, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t dims_product(std::span<const std::size_t> dims);

/// Dense complex matrix that remembers how its rows and columns factor into
/// tensor components. The leftmost factor is the most significant index.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Square matrix acting on the tensor product described by `dims`.
  ComplexMatrix(Eigen::MatrixXcd data, Dims dims);
  ComplexMatrix(Eigen::MatrixXcd data, Dims row_dims, Dims col_dims);

  static ComplexMatrix identity(const Dims& dims);
  static ComplexMatrix zero(const Dims& dims);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  const Eigen::MatrixXcd& data() const { return data_; }
  Eigen::MatrixXcd& data() { return data_; }
  const Dims& row_dims() const { return row_dims_; }
  const Dims& col_dims() const { return col_dims_; }
  /// Factor dimensions of a square matrix; throws for rectangular ones.
  const Dims& dims() const;

  Eigen::Index rows() const { return data_.rows(); }
  Eigen::Index cols() const { return data_.cols(); }
  bool is_square() const { return row_dims_ == col_dims_; }
  std::size_t num_factors() const { return row_dims_.size(); }

  cplx operator()(Eigen::Index r, Eigen::Index c) const { return data_(r, c); }
  cplx& operator()(Eigen::Index r, Eigen::Index c) { return data_(r, c); }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  cplx trace() const;

  /// max |M - M^dagger| entry <= tol.
  bool is_hermitian(double tol = kDefaultTol) const;
  /// ||M^dagger M - I||_max <= tol.
  bool is_unitary(double tol = kDefaultTol) const;
  double max_abs_diff(const ComplexMatrix& other) const;
  double frobenius_norm() const { return data_.norm(); }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  Eigen::MatrixXcd data_;
  Dims row_dims_;
  Dims col_dims_;
};

/// Vector in a tensor-product space. Zero vectors are legal values.
class PureState {
 public:
  PureState() = default;
  PureState(Eigen::VectorXcd amplitudes, Dims dims);

  static PureState basis(const Dims& dims, std::size_t index);

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  const Dims& dims() const { return dims_; }
  double norm() const { return amps_.norm(); }
  /// norm is zero or within tol of one.
  bool is_normalized_or_zero(double tol = kDefaultTol) const;

  PureState normalized() const;
  PureState conjugate() const;
  /// |psi><psi| with the same factor dims.
  ComplexMatrix projector() const;

 private:
  Eigen::VectorXcd amps_;
  Dims dims_;
};

cplx inner(const PureState& a, const PureState& b);
PureState tensor_product(const PureState& a, const PureState& b);

/// Orthonormal basis of a subspace of the ambient space.
struct Subspace {
  std::vector<PureState> basis;
  Dims ambient_dims;

  std::size_t dim() const { return basis.size(); }
  ComplexMatrix projector() const;
};

/// Kronecker product; |i>|j> maps to index i * dim(b) + j.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_power(const ComplexMatrix& a, std::size_t n);

/// Transpose of a single tensor factor: (|ij><kl|)^Gamma = |kj><il| for factor 0.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t factor_index);
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> factors);

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t factor_index);
/// Traces out every listed factor; the survivors keep their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> factors);

/// Reorders tensor factors: factor `perm[k]` of the input becomes factor k of the output.
ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const std::size_t> perm);
PureState permute_factors(const PureState& v, std::span<const std::size_t> perm);

/// Embeds `op` (acting on the listed factors, in that order) into the full space.
ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> factors,
                             const Dims& dims);

/// Returns (support, null) of a Hermitian PSD matrix. Eigenvalues above
/// tol * ||m|| span the support.
std::pair<Subspace, Subspace> support_null(const ComplexMatrix& m, double tol = kDefaultTol);

/// tr(a^dagger b).
cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);
/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Standard qudit matrices. `omega` is exp(2 pi i / d).
cplx root_of_unity(std::size_t d, long long power);
ComplexMatrix fourier_matrix(std::size_t d);
ComplexMatrix shift_matrix(std::size_t d);
/// Z = sum_k omega^k |k><k|.
ComplexMatrix clock_matrix(std::size_t d);
ComplexMatrix clock_power(std::size_t d, long long power);
ComplexMatrix ket_bra(std::size_t d, std::size_t row, std::size_t col);

/// |Phi> = d^{-1/2} sum_i |ii>.
PureState max_entangled_state(std::size_t d);
/// Rank-one projector onto |Phi>, dims (d, d).
ComplexMatrix max_entangled_projector(std::size_t d);

}  // namespace zec
