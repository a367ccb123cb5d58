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


#include "zec/channel.hpp"

#include <cmath>

namespace zec {

std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

std::size_t flatten_tuple(const Tuple& t, std::size_t base) {
  std::size_t idx = 0;
  for (auto v : t) {
    if (v >= base) throw Error("flatten_tuple: entry out of range");
    idx = idx * base + v;
  }
  return idx;
}

Tuple unflatten_tuple(std::size_t index, std::size_t base, std::size_t n) {
  Tuple t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = index % base;
    index /= base;
  }
  return t;
}

const ComplexMatrix& NdChannel::z(long long l) const {
  auto dd = static_cast<long long>(d);
  return z_powers[static_cast<std::size_t>(((l % dd) + dd) % dd)];
}

NdChannel build_channel(std::size_t d, UnitaryFamily f) {
  if (!f.verified) throw Error("build_channel: design family is not verified");
  if (f.d != d) throw Error("build_channel: design dimension does not match d");
  NdChannel c;
  c.d = d;
  c.design = std::move(f);
  for (std::size_t l = 0; l < d; ++l) c.z_powers.push_back(clock_power(d, static_cast<long long>(l)));
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      p(i * d + j, i * d + j) = root_of_unity(d, static_cast<long long>(i * j));
    }
  }
  c.phase_gate = ComplexMatrix(std::move(p), Dims{d, d});
  return c;
}

// ---------------------------------------------------------------------------
// BlockStateVector

BlockStateVector::BlockStateVector(std::size_t d, std::size_t n) : d_(d), n_(n) {
  if (d < 2 || n < 1) throw Error("BlockStateVector: need d >= 2 and n >= 1");
  auto count = int_pow(d, n);
  blocks_.assign(count, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(count)));
}

BlockStateVector BlockStateVector::from_state(const PureState& full, std::size_t d,
                                              std::size_t n) {
  BlockStateVector out(d, n);
  auto side = static_cast<Eigen::Index>(out.block_dim());
  if (full.amplitudes().size() != side * side) {
    throw Error("BlockStateVector::from_state: vector length is not d^(2n)");
  }
  for (std::size_t b = 0; b < out.num_blocks(); ++b) {
    out.blocks_[b] = full.amplitudes().segment(static_cast<Eigen::Index>(b) * side, side);
  }
  return out;
}

PureState BlockStateVector::to_state() const {
  auto side = static_cast<Eigen::Index>(block_dim());
  Eigen::VectorXcd v(side * side);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    v.segment(static_cast<Eigen::Index>(b) * side, side) = blocks_[b];
  }
  return {std::move(v), Dims(2 * n_, d_)};
}

double BlockStateVector::norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

BlockStateVector BlockStateVector::normalized() const {
  double nrm = norm();
  if (nrm == 0.0) return *this;
  BlockStateVector out = *this;
  out *= 1.0 / nrm;
  return out;
}

void BlockStateVector::require_compatible(const BlockStateVector& other) const {
  if (d_ != other.d_ || n_ != other.n_) throw Error("BlockStateVector: d or n mismatch");
}

BlockStateVector& BlockStateVector::operator+=(const BlockStateVector& rhs) {
  require_compatible(rhs);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += rhs.blocks_[b];
  return *this;
}

BlockStateVector& BlockStateVector::operator-=(const BlockStateVector& rhs) {
  require_compatible(rhs);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= rhs.blocks_[b];
  return *this;
}

BlockStateVector& BlockStateVector::operator*=(cplx s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

double CQState::total_trace() const {
  double t = 0.0;
  for (const auto& br : branches) t += br.weight * br.matrix.trace().real();
  return t;
}

// ---------------------------------------------------------------------------
// Channel action

namespace {

void require_match(const NdChannel& c, const BlockStateVector& psi) {
  if (psi.d() != c.d) throw Error("channel: input dimension does not match the channel");
}

struct LabelData {
  Tuple label;
  double weight;
  Eigen::MatrixXcd g;  // g_{j_1} (x) ... (x) g_{j_n}
};

LabelData label_data(const NdChannel& c, std::size_t flat, std::size_t n) {
  LabelData out{unflatten_tuple(flat, c.design.size(), n), 1.0, {}};
  ComplexMatrix g;
  for (std::size_t t = 0; t < n; ++t) {
    auto j = out.label[t];
    out.weight *= c.design.weights[j];
    g = t == 0 ? c.design.members[j] : tensor_product(g, c.design.members[j]);
  }
  out.g = g.data();
  return out;
}

// Diagonal of Z_{l_1} (x) ... (x) Z_{l_n} for the tuple l = unflatten(l_flat).
Eigen::VectorXcd z_diagonal(std::size_t d, std::size_t n, const Tuple& powers) {
  auto side = int_pow(d, n);
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(side));
  for (std::size_t a = 0; a < side; ++a) {
    Tuple digits = unflatten_tuple(a, d, n);
    long long phase = 0;
    for (std::size_t t = 0; t < n; ++t) {
      phase += static_cast<long long>(powers[t]) * static_cast<long long>(digits[t]);
    }
    diag(static_cast<Eigen::Index>(a)) = root_of_unity(d, phase);
  }
  return diag;
}

// diag(Z_{(k - i) mod d}) indexed by flat (k - i) difference tuple.
std::vector<Eigen::VectorXcd> all_z_diagonals(std::size_t d, std::size_t n) {
  auto count = int_pow(d, n);
  std::vector<Eigen::VectorXcd> out;
  out.reserve(count);
  for (std::size_t f = 0; f < count; ++f) out.push_back(z_diagonal(d, n, unflatten_tuple(f, d, n)));
  return out;
}

std::size_t difference_index(std::size_t k, std::size_t i, std::size_t d, std::size_t n) {
  Tuple kt = unflatten_tuple(k, d, n), it = unflatten_tuple(i, d, n), diff(n);
  for (std::size_t t = 0; t < n; ++t) diff[t] = (kt[t] + d - it[t]) % d;
  return flatten_tuple(diff, d);
}

}  // namespace

CQState apply_n(const NdChannel& c, const BlockStateVector& psi) {
  require_match(c, psi);
  const std::size_t d = c.d, n = psi.n(), blocks = psi.num_blocks();
  const auto side = static_cast<Eigen::Index>(psi.block_dim());
  auto zdiag = all_z_diagonals(d, n);
  std::vector<std::size_t> diff(blocks * blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (std::size_t i = 0; i < blocks; ++i) diff[k * blocks + i] = difference_index(k, i, d, n);
  }

  CQState out;
  out.n = n;
  const std::size_t labels = c.num_labels(n);
  out.branches.reserve(labels);
  std::vector<Eigen::VectorXcd> gamma(blocks);
  for (std::size_t flat = 0; flat < labels; ++flat) {
    auto ld = label_data(c, flat, n);
    for (std::size_t i = 0; i < blocks; ++i) gamma[i] = ld.g * psi.block(i);
    Eigen::MatrixXcd rho(side, side);
    for (std::size_t k = 0; k < blocks; ++k) {
      for (std::size_t i = 0; i < blocks; ++i) {
        // <gamma_i| Z_{k-i} |gamma_k>
        rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
            gamma[i].dot(zdiag[diff[k * blocks + i]].cwiseProduct(gamma[k]));
      }
    }
    out.branches.push_back({std::move(ld.label), ld.weight, ComplexMatrix(std::move(rho), Dims(n, d))});
  }
  return out;
}

CQState apply_complementary_n(const NdChannel& c, const BlockStateVector& psi) {
  require_match(c, psi);
  const std::size_t d = c.d, n = psi.n(), blocks = psi.num_blocks();
  const auto side = static_cast<Eigen::Index>(psi.block_dim());
  auto zdiag = all_z_diagonals(d, n);

  CQState out;
  out.n = n;
  const std::size_t labels = c.num_labels(n);
  out.branches.reserve(labels);
  for (std::size_t flat = 0; flat < labels; ++flat) {
    auto ld = label_data(c, flat, n);
    Eigen::MatrixXcd env = Eigen::MatrixXcd::Zero(side, side);
    for (std::size_t i = 0; i < blocks; ++i) {
      // Z_{i_1} (x) ... (x) Z_{i_n} G |alpha_i>
      Eigen::VectorXcd v = zdiag[i].cwiseProduct(ld.g * psi.block(i));
      env += v * v.adjoint();
    }
    out.branches.push_back({std::move(ld.label), ld.weight, ComplexMatrix(std::move(env), Dims(n, d))});
  }
  return out;
}

double cq_overlap(const CQState& x, const CQState& y) {
  if (x.n != y.n || x.branches.size() != y.branches.size()) {
    throw Error("cq_overlap: label sets differ");
  }
  double total = 0.0;
  for (std::size_t b = 0; b < x.branches.size(); ++b) {
    const auto& bx = x.branches[b];
    const auto& by = y.branches[b];
    if (bx.label != by.label) throw Error("cq_overlap: label sets differ");
    total += bx.weight * by.weight * trace_inner(bx.matrix, by.matrix).real();
  }
  return total;
}

}  // namespace zec
