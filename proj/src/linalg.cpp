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

#include "zec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zec {

namespace {

// Row-major strides for a list of factor dims.
std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

std::size_t digit(std::size_t index, const std::vector<std::size_t>& strides, const Dims& dims,
                  std::size_t k) {
  return (index / strides[k]) % dims[k];
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(std::string(what) + ": matrix must be square");
}

void check_factor_list(const ComplexMatrix& m, std::span<const std::size_t> factors,
                       const char* what) {
  std::vector<bool> seen(m.num_factors(), false);
  for (auto f : factors) {
    if (f >= m.num_factors()) throw Error(std::string(what) + ": factor index out of range");
    if (seen[f]) throw Error(std::string(what) + ": repeated factor index");
    seen[f] = true;
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_solver(const ComplexMatrix& m,
                                                                 bool vectors) {
  require_square(m, "eigen");
  // Symmetrize so fp dust in the upper triangle is not silently dropped.
  Eigen::MatrixXcd h = 0.5 * (m.data() + m.data().adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

std::size_t dims_product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data, Dims dims)
    : ComplexMatrix(std::move(data), dims, dims) {}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data, Dims row_dims, Dims col_dims)
    : data_(std::move(data)), row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)) {
  if (static_cast<Eigen::Index>(dims_product(row_dims_)) != data_.rows() ||
      static_cast<Eigen::Index>(dims_product(col_dims_)) != data_.cols()) {
    throw Error("ComplexMatrix: factor dims do not match matrix shape");
  }
}

ComplexMatrix ComplexMatrix::identity(const Dims& dims) {
  auto n = static_cast<Eigen::Index>(dims_product(dims));
  return {Eigen::MatrixXcd::Identity(n, n), dims};
}

ComplexMatrix ComplexMatrix::zero(const Dims& dims) {
  auto n = static_cast<Eigen::Index>(dims_product(dims));
  return {Eigen::MatrixXcd::Zero(n, n), dims};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return {std::move(m), Dims{diag.size()}};
}

const Dims& ComplexMatrix::dims() const {
  if (!is_square()) throw Error("ComplexMatrix::dims: matrix is not square");
  return row_dims_;
}

ComplexMatrix ComplexMatrix::adjoint() const { return {data_.adjoint(), col_dims_, row_dims_}; }
ComplexMatrix ComplexMatrix::conjugate() const { return {data_.conjugate(), row_dims_, col_dims_}; }
ComplexMatrix ComplexMatrix::transpose() const { return {data_.transpose(), col_dims_, row_dims_}; }

cplx ComplexMatrix::trace() const {
  require_square(*this, "trace");
  return data_.trace();
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows() != cols()) return false;
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows() != cols()) return false;
  Eigen::MatrixXcd r = data_.adjoint() * data_ - Eigen::MatrixXcd::Identity(rows(), cols());
  return r.cwiseAbs().maxCoeff() <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw Error("max_abs_diff: shape mismatch");
  }
  if (rows() == 0 || cols() == 0) return 0.0;
  return (data_ - other.data_).cwiseAbs().maxCoeff();
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows() != rhs.rows() || cols() != rhs.cols()) throw Error("operator+: shape mismatch");
  data_ += rhs.data_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows() != rhs.rows() || cols() != rhs.cols()) throw Error("operator-: shape mismatch");
  data_ -= rhs.data_;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  data_ *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error("operator*: inner dimension mismatch");
  return {a.data() * b.data(), a.row_dims(), b.col_dims()};
}

// ---------------------------------------------------------------------------
// PureState / Subspace

PureState::PureState(Eigen::VectorXcd amplitudes, Dims dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (static_cast<Eigen::Index>(dims_product(dims_)) != amps_.size()) {
    throw Error("PureState: factor dims do not match vector length");
  }
}

PureState PureState::basis(const Dims& dims, std::size_t index) {
  auto n = dims_product(dims);
  if (index >= n) throw Error("PureState::basis: index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {std::move(v), dims};
}

bool PureState::is_normalized_or_zero(double tol) const {
  double nrm = norm();
  return nrm == 0.0 || std::abs(nrm - 1.0) <= tol;
}

PureState PureState::normalized() const {
  double nrm = norm();
  if (nrm == 0.0) return *this;
  return {amps_ / nrm, dims_};
}

PureState PureState::conjugate() const { return {amps_.conjugate(), dims_}; }

ComplexMatrix PureState::projector() const { return {amps_ * amps_.adjoint(), dims_}; }

cplx inner(const PureState& a, const PureState& b) {
  if (a.amplitudes().size() != b.amplitudes().size()) throw Error("inner: length mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

PureState tensor_product(const PureState& a, const PureState& b) {
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  Eigen::VectorXcd out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {std::move(out), std::move(dims)};
}

ComplexMatrix Subspace::projector() const {
  ComplexMatrix p = ComplexMatrix::zero(ambient_dims);
  for (const auto& v : basis) p.data() += v.amplitudes() * v.amplitudes().adjoint();
  return p;
}

// ---------------------------------------------------------------------------
// Tensor-factor operations

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  Dims rd = a.row_dims();
  rd.insert(rd.end(), b.row_dims().begin(), b.row_dims().end());
  Dims cd = a.col_dims();
  cd.insert(cd.end(), b.col_dims().begin(), b.col_dims().end());
  return {std::move(out), std::move(rd), std::move(cd)};
}

ComplexMatrix tensor_power(const ComplexMatrix& a, std::size_t n) {
  if (n == 0) throw Error("tensor_power: n must be positive");
  ComplexMatrix out = a;
  for (std::size_t k = 1; k < n; ++k) out = tensor_product(out, a);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t factor_index) {
  std::size_t f[] = {factor_index};
  return partial_transpose(m, f);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> factors) {
  require_square(m, "partial_transpose");
  check_factor_list(m, factors, "partial_transpose");
  const Dims& dims = m.dims();
  auto st = strides_of(dims);
  const auto n = static_cast<std::size_t>(m.rows());
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r2 = r, c2 = c;
      for (auto k : factors) {
        std::size_t dr = digit(r, st, dims, k), dc = digit(c, st, dims, k);
        r2 = r2 - dr * st[k] + dc * st[k];
        c2 = c2 - dc * st[k] + dr * st[k];
      }
      out(r2, c2) = m(r, c);
    }
  }
  return {std::move(out), dims};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t factor_index) {
  std::size_t f[] = {factor_index};
  return partial_trace(m, f);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> factors) {
  require_square(m, "partial_trace");
  check_factor_list(m, factors, "partial_trace");
  const Dims& dims = m.dims();
  std::vector<bool> traced(dims.size(), false);
  for (auto f : factors) traced[f] = true;
  Dims kept;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!traced[k]) kept.push_back(dims[k]);
  }
  auto st = strides_of(dims);
  auto kst = strides_of(kept);
  const auto n = static_cast<std::size_t>(m.rows());

  // Split every full index into (kept index, traced index).
  std::vector<std::size_t> keep_idx(n), trace_idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ki = 0, ti = 0, kpos = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::size_t dg = digit(i, st, dims, k);
      if (traced[k]) {
        ti = ti * dims[k] + dg;
      } else {
        ki += dg * kst[kpos++];
      }
    }
    keep_idx[i] = ki;
    trace_idx[i] = ti;
  }
  auto kn = static_cast<Eigen::Index>(dims_product(kept));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kn, kn);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (trace_idx[r] == trace_idx[c]) out(keep_idx[r], keep_idx[c]) += m(r, c);
    }
  }
  if (kept.empty()) kept.push_back(1);
  return {std::move(out), std::move(kept)};
}

namespace {

// For each output index, the input index it reads from.
std::vector<std::size_t> permutation_map(const Dims& dims, std::span<const std::size_t> perm) {
  if (perm.size() != dims.size()) throw Error("permute_factors: permutation size mismatch");
  std::vector<bool> seen(dims.size(), false);
  for (auto p : perm) {
    if (p >= dims.size() || seen[p]) throw Error("permute_factors: not a permutation");
    seen[p] = true;
  }
  Dims out_dims(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[perm[k]];
  auto in_st = strides_of(dims);
  auto out_st = strides_of(out_dims);
  std::size_t n = dims_product(dims);
  std::vector<std::size_t> map(n);
  for (std::size_t o = 0; o < n; ++o) {
    std::size_t in = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      in += digit(o, out_st, out_dims, k) * in_st[perm[k]];
    }
    map[o] = in;
  }
  return map;
}

Dims permuted_dims(const Dims& dims, std::span<const std::size_t> perm) {
  Dims out(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out[k] = dims[perm[k]];
  return out;
}

}  // namespace

ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const std::size_t> perm) {
  require_square(m, "permute_factors");
  auto map = permutation_map(m.dims(), perm);
  const auto n = static_cast<Eigen::Index>(map.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m(map[r], map[c]);
  }
  return {std::move(out), permuted_dims(m.dims(), perm)};
}

PureState permute_factors(const PureState& v, std::span<const std::size_t> perm) {
  auto map = permutation_map(v.dims(), perm);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(map.size()));
  for (std::size_t o = 0; o < map.size(); ++o) out(o) = v.amplitudes()(map[o]);
  return {std::move(out), permuted_dims(v.dims(), perm)};
}

ComplexMatrix embed_operator(const ComplexMatrix& op, std::span<const std::size_t> factors,
                             const Dims& dims) {
  if (!op.is_square() || op.num_factors() != factors.size()) {
    throw Error("embed_operator: operator factors do not match factor list");
  }
  std::vector<bool> used(dims.size(), false);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto f = factors[i];
    if (f >= dims.size() || used[f]) throw Error("embed_operator: bad factor index");
    if (op.dims()[i] != dims[f]) throw Error("embed_operator: factor dimension mismatch");
    used[f] = true;
    perm.push_back(f);
  }
  Dims rest;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!used[k]) {
      perm.push_back(k);
      rest.push_back(dims[k]);
    }
  }
  ComplexMatrix arranged = rest.empty() ? op : tensor_product(op, ComplexMatrix::identity(rest));
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inverse[perm[k]] = k;
  return permute_factors(arranged, inverse);
}

// ---------------------------------------------------------------------------
// Spectral helpers

std::pair<Subspace, Subspace> support_null(const ComplexMatrix& m, double tol) {
  require_square(m, "support_null");
  double scale = m.rows() == 0 ? 0.0 : m.data().cwiseAbs().maxCoeff();
  if (!m.is_hermitian(tol * std::max(scale, 1.0))) {
    throw Error("support_null: matrix is not Hermitian");
  }
  auto solver = hermitian_solver(m, true);
  const auto& evals = solver.eigenvalues();
  double norm = evals.size() == 0 ? 0.0 : evals.cwiseAbs().maxCoeff();
  double cut = tol * norm;
  Subspace support{{}, m.dims()}, null{{}, m.dims()};
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    if (evals(k) < -cut) throw Error("support_null: matrix has a negative eigenvalue");
    PureState v(solver.eigenvectors().col(k), m.dims());
    (evals(k) > cut ? support : null).basis.push_back(std::move(v));
  }
  return {std::move(support), std::move(null)};
}

cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("trace_inner: shape mismatch");
  // tr(a^dagger b) = sum conj(a_ij) b_ij
  return (a.data().conjugate().cwiseProduct(b.data())).sum();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_solver(m, false).eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) {
  auto ev = hermitian_eigenvalues(m);
  return ev.size() == 0 ? 0.0 : ev.minCoeff();
}

double trace_norm(const ComplexMatrix& m) { return hermitian_eigenvalues(m).cwiseAbs().sum(); }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * trace_norm(a - b);
}

// ---------------------------------------------------------------------------
// Standard matrices

cplx root_of_unity(std::size_t d, long long power) {
  auto dd = static_cast<long long>(d);
  long long p = ((power % dd) + dd) % dd;
  // Exact values on the real/imaginary axes keep products like Z^d = I exact.
  if (p == 0) return {1.0, 0.0};
  if (2 * p == dd) return {-1.0, 0.0};
  if (4 * p == dd) return {0.0, 1.0};
  if (4 * p == 3 * dd) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(d));
}

ComplexMatrix fourier_matrix(std::size_t d) {
  Eigen::MatrixXcd f(d, d);
  double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      f(j, k) = s * root_of_unity(d, static_cast<long long>(j * k));
    }
  }
  return {std::move(f), Dims{d}};
}

ComplexMatrix shift_matrix(std::size_t d) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return {std::move(x), Dims{d}};
}

ComplexMatrix clock_matrix(std::size_t d) { return clock_power(d, 1); }

ComplexMatrix clock_power(std::size_t d, long long power) {
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    z(k, k) = root_of_unity(d, power * static_cast<long long>(k));
  }
  return {std::move(z), Dims{d}};
}

ComplexMatrix ket_bra(std::size_t d, std::size_t row, std::size_t col) {
  if (row >= d || col >= d) throw Error("ket_bra: index out of range");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(row, col) = 1.0;
  return {std::move(m), Dims{d}};
}

PureState max_entangled_state(std::size_t d) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
  double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v(i * d + i) = s;
  return {std::move(v), Dims{d, d}};
}

ComplexMatrix max_entangled_projector(std::size_t d) { return max_entangled_state(d).projector(); }

}  // namespace zec
