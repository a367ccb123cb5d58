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


#include "zec/zero_error.hpp"

#include <cmath>
#include <vector>

namespace zec {

namespace {

void require_pair(const BlockStateVector& a, const BlockStateVector& b) {
  if (a.d() != b.d() || a.n() != b.n()) throw Error("zero-error: d or n mismatch between inputs");
}

// Applies the d^2 x d^2 operator `op` to tensor indices (t, n + t) of a
// vector with 2n factors of dimension d.
Eigen::VectorXcd apply_on_pair(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& v,
                               std::size_t d, std::size_t n, std::size_t t) {
  const std::size_t total = 2 * n;
  std::vector<std::size_t> stride(total, 1);
  for (std::size_t k = total; k-- > 1;) stride[k - 1] = stride[k] * d;
  const std::size_t sa = stride[t], sb = stride[n + t];
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    auto u = static_cast<std::size_t>(idx);
    std::size_t a = (u / sa) % d, b = (u / sb) % d;
    std::size_t base = u - a * sa - b * sb;
    if (a != 0 || b != 0) continue;  // visit each (a, b) fiber once from its origin
    for (std::size_t ra = 0; ra < d; ++ra) {
      for (std::size_t rb = 0; rb < d; ++rb) {
        cplx acc = 0.0;
        for (std::size_t ca = 0; ca < d; ++ca) {
          for (std::size_t cb = 0; cb < d; ++cb) {
            acc += op(ra * d + rb, ca * d + cb) * v(base + ca * sa + cb * sb);
          }
        }
        out(base + ra * sa + rb * sb) = acc;
      }
    }
  }
  return out;
}

}  // namespace

ComplexMatrix a_coefficients(std::size_t d) {
  if (d < 2) throw Error("a_coefficients: d must be at least 2");
  double off = -1.0 / static_cast<double>(d * d - 1);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Constant(d, d, off);
  a.diagonal().setOnes();
  return {std::move(a), Dims{d}};
}

ComplexMatrix build_A(std::size_t d) {
  auto a = a_coefficients(d);
  ComplexMatrix phi = max_entangled_projector(d);
  ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
  ComplexMatrix out = ComplexMatrix::zero(Dims{d, d, d});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      out += tensor_product(ket_bra(d, i, k), a(i, k) * rest + phi);
    }
  }
  return out;
}

ComplexMatrix average_A_over_design(const UnitaryFamily& f) {
  const std::size_t d = f.d;
  ComplexMatrix out = ComplexMatrix::zero(Dims{d, d, d});
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& g = f.members[j];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        ComplexMatrix inner_op = g.adjoint() * clock_power(d, static_cast<long long>(k) -
                                                                  static_cast<long long>(i)) * g;
        out += f.weights[j] *
               tensor_product(ket_bra(d, i, k), tensor_product(inner_op, inner_op.conjugate()));
      }
    }
  }
  return out;
}

ComplexMatrix a_support_projector(std::size_t d) {
  ComplexMatrix phi = max_entangled_projector(d);
  ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
  Eigen::VectorXcd nu = Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  ComplexMatrix nu_proj(nu * nu.adjoint(), Dims{d});
  return tensor_product(ComplexMatrix::identity(Dims{d}), rest) + tensor_product(nu_proj, phi);
}

PureState build_x(const BlockStateVector& psi1, const BlockStateVector& psi2) {
  require_pair(psi1, psi2);
  const auto side = static_cast<Eigen::Index>(psi1.block_dim());
  Eigen::VectorXcd x(side * side * side);
  for (std::size_t i = 0; i < psi1.num_blocks(); ++i) {
    const auto& a = psi1.block(i);
    Eigen::VectorXcd bc = psi2.block(i).conjugate();
    for (Eigen::Index p = 0; p < side; ++p) {
      x.segment((static_cast<Eigen::Index>(i) * side + p) * side, side) = a(p) * bc;
    }
  }
  auto s = static_cast<std::size_t>(side);
  return {std::move(x), Dims{s, s, s}};
}

double overlap_via_A(const BlockStateVector& psi1, const BlockStateVector& psi2) {
  require_pair(psi1, psi2);
  const std::size_t d = psi1.d(), n = psi1.n(), blocks = psi1.num_blocks();
  const ComplexMatrix a = build_A(d);
  const auto dd = static_cast<Eigen::Index>(d * d);

  // |alpha_i>|beta_i^c> with factor order (a_1..a_n, b_1..b_n).
  std::vector<Eigen::VectorXcd> v(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    const auto& al = psi1.block(i);
    Eigen::VectorXcd bc = psi2.block(i).conjugate();
    v[i].resize(al.size() * bc.size());
    for (Eigen::Index p = 0; p < al.size(); ++p) v[i].segment(p * bc.size(), bc.size()) = al(p) * bc;
  }

  cplx total = 0.0;
  for (std::size_t k = 0; k < blocks; ++k) {
    if (v[k].squaredNorm() == 0.0) continue;
    Tuple kt = unflatten_tuple(k, d, n);
    for (std::size_t i = 0; i < blocks; ++i) {
      if (v[i].squaredNorm() == 0.0) continue;
      Tuple it = unflatten_tuple(i, d, n);
      Eigen::VectorXcd w = v[k];
      for (std::size_t t = 0; t < n; ++t) {
        if (it[t] == kt[t]) continue;  // diagonal blocks of A are the identity
        Eigen::MatrixXcd blk = a.data().block(static_cast<Eigen::Index>(it[t]) * dd,
                                              static_cast<Eigen::Index>(kt[t]) * dd, dd, dd);
        w = apply_on_pair(blk, w, d, n, t);
      }
      total += v[i].dot(w);
    }
  }
  return total.real();
}

bool disjoint_support(const BlockStateVector& psi1, const BlockStateVector& psi2,
                      double block_tol) {
  require_pair(psi1, psi2);
  for (std::size_t i = 0; i < psi1.num_blocks(); ++i) {
    if (std::min(psi1.block(i).norm(), psi2.block(i).norm()) > block_tol) return false;
  }
  return true;
}

Lemma1Result lemma1_criterion(const BlockStateVector& psi1, const BlockStateVector& psi2,
                              double tol) {
  require_pair(psi1, psi2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  BlockStateVector plus = inv_sqrt2 * (psi1 + psi2);
  BlockStateVector minus = inv_sqrt2 * (psi1 - psi2);
  Lemma1Result r;
  r.overlap = overlap_via_A(psi1, psi2);
  r.pm_overlap = overlap_via_A(plus, minus);
  r.orthogonal = std::abs(r.overlap) <= tol;
  r.pm_orthogonal = std::abs(r.pm_overlap) <= tol;
  r.degenerate = psi1.is_zero(kBlockTol) || psi2.is_zero(kBlockTol) || plus.is_zero(kBlockTol) ||
                 minus.is_zero(kBlockTol);
  return r;
}

OrthogonalityReport orthogonality_report(const NdChannel& c, const BlockStateVector& psi1,
                                         const BlockStateVector& psi2, double tol) {
  require_pair(psi1, psi2);
  OrthogonalityReport r;
  auto out1 = apply_n(c, psi1);
  auto out2 = apply_n(c, psi2);
  // Uniform weights: E_j tr(rho_j sigma_j) = m^n * sum_j w_j^2 tr(rho_j sigma_j).
  r.overlap_value = cq_overlap(out1, out2) * static_cast<double>(c.num_labels(psi1.n()));
  r.a_form_value = overlap_via_A(psi1, psi2);
  r.disjoint_support = disjoint_support(psi1, psi2);
  r.agree = ((std::abs(r.overlap_value) <= tol) == r.disjoint_support) &&
            std::abs(r.overlap_value - r.a_form_value) <= tol;
  return r;
}

}  // namespace zec
