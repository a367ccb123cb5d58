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


#include "zec/nc_graph.hpp"

#include <cmath>

namespace zec {

ComplexMatrix OperatorSpan::project(const ComplexMatrix& m) const {
  ComplexMatrix out = ComplexMatrix::zero(dims);
  for (const auto& b : basis) out += trace_inner(b, m) * b;
  return out;
}

OperatorSpan span_of(std::span<const ComplexMatrix> mats, const Dims& dims, double tol) {
  OperatorSpan s{dims, {}};
  const std::size_t limit = s.ambient_dim();
  for (const auto& m : mats) {
    if (s.dim() == limit) break;
    if (!m.is_square() || m.dims() != dims) throw Error("span_of: operator dims mismatch");
    double norm0 = m.frobenius_norm();
    if (norm0 == 0.0) continue;
    ComplexMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : s.basis) r -= trace_inner(b, r) * b;
    }
    double nr = r.frobenius_norm();
    if (nr <= tol * norm0) continue;
    s.basis.push_back(r * (1.0 / nr));
  }
  return s;
}

OperatorSpan full_matrix_space(const Dims& dims) {
  const std::size_t side = dims_product(dims);
  OperatorSpan s{dims, {}};
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(side, side);
      m(r, c) = 1.0;
      s.basis.emplace_back(std::move(m), dims);
    }
  }
  return s;
}

std::vector<ComplexMatrix> kraus_operators(const NdChannel& c) {
  const std::size_t d = c.d;
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < c.design.size(); ++j) {
    const auto& v = c.design.members[j];
    const double w = c.design.weights[j];
    for (std::size_t k = 0; k < d; ++k) {
      Eigen::MatrixXcd bra_k_v = v.data().row(static_cast<Eigen::Index>(k));  // <k| V
      ComplexMatrix kv(std::move(bra_k_v), Dims{1}, Dims{d});
      out.push_back(std::sqrt(w) * tensor_product(c.z(static_cast<long long>(k)), kv));
    }
  }
  return out;
}

OperatorSpan factor_span(const NdChannel& c, std::size_t k, std::size_t l) {
  const std::size_t d = c.d;
  ComplexMatrix lk = ket_bra(d, l, k);
  std::vector<ComplexMatrix> mats;
  for (const auto& v : c.design.members) mats.push_back(v.adjoint() * lk * v);
  return span_of(mats, Dims{d});
}

OperatorSpan graph_span(const NdChannel& c) {
  const std::size_t d = c.d;
  std::vector<ComplexMatrix> mats;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      ComplexMatrix z = c.z(static_cast<long long>(k) - static_cast<long long>(l));
      ComplexMatrix lk = ket_bra(d, l, k);
      for (const auto& v : c.design.members) mats.push_back(tensor_product(z, v.adjoint() * lk * v));
    }
  }
  return span_of(mats, Dims{d, d});
}

bool contains(const OperatorSpan& s, const ComplexMatrix& m, double tol) {
  if (!m.is_square() || dims_product(m.dims()) != dims_product(s.dims)) {
    throw Error("contains: ambient dimension mismatch");
  }
  ComplexMatrix mm(m.data(), s.dims);
  double norm = mm.frobenius_norm();
  if (norm == 0.0) return true;
  return (mm - s.project(mm)).frobenius_norm() <= tol * norm;
}

ConditionVerdict condition_checks(const OperatorSpan& s, std::size_t d, double tol) {
  const ComplexMatrix z = clock_matrix(d);
  const ComplexMatrix id = ComplexMatrix::identity(Dims{d});
  const ComplexMatrix z_i = tensor_product(z, id);
  const ComplexMatrix i_z = tensor_product(id, z);
  const ComplexMatrix z_zd = tensor_product(z, z.adjoint());
  ConditionVerdict v;
  v.a_violated = !contains(s, z_i, tol);
  v.b_violated = contains(s, i_z, tol) && contains(s, z_zd, tol) && !contains(s, i_z * z_zd, tol);
  return v;
}

}  // namespace zec
