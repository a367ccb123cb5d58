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


#include "zec/two_design.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

namespace zec {

namespace {

constexpr double kNonzeroEntry = 1e-8;
constexpr double kKeyScale = 1e10;

long long round_key(double x) {
  long long k = std::llround(x * kKeyScale);
  return k;
}

void require_supported(std::size_t d) {
  if (d != 2 && d != 3) {
    throw Error("enumerate_clifford: unsupported dimension " + std::to_string(d) +
                " (exact enumeration is provided for d = 2, 3)");
  }
}

}  // namespace

ComplexMatrix phase_canonicalize(const ComplexMatrix& u) {
  const auto& m = u.data();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double a = std::abs(m(r, c));
      if (a > kNonzeroEntry) return u * (std::conj(m(r, c)) / a);
    }
  }
  return u;
}

std::vector<long long> dedup_key(const ComplexMatrix& canonical) {
  const auto& m = canonical.data();
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      key.push_back(round_key(m(r, c).real()));
      key.push_back(round_key(m(r, c).imag()));
    }
  }
  return key;
}

ComplexMatrix clifford_phase_gate(std::size_t d) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  if (d == 2) {
    s(0, 0) = 1.0;
    s(1, 1) = cplx(0.0, 1.0);
  } else {
    for (std::size_t j = 0; j < d; ++j) {
      auto jj = static_cast<long long>(j);
      s(j, j) = root_of_unity(d, jj * (jj - 1) / 2);
    }
  }
  return {std::move(s), Dims{d}};
}

UnitaryFamily multiplicative_closure(std::size_t d, std::span<const ComplexMatrix> generators,
                                     std::size_t size_cap) {
  UnitaryFamily f;
  f.d = d;
  std::map<std::vector<long long>, std::size_t> seen;
  std::deque<std::size_t> frontier;

  auto add = [&](const ComplexMatrix& u) {
    ComplexMatrix c = phase_canonicalize(u);
    auto [it, inserted] = seen.emplace(dedup_key(c), f.members.size());
    if (!inserted) return;
    if (f.members.size() >= size_cap) {
      throw Error("multiplicative_closure: closure exceeds size cap " + std::to_string(size_cap));
    }
    f.members.push_back(std::move(c));
    frontier.push_back(f.members.size() - 1);
  };

  add(ComplexMatrix::identity(Dims{d}));
  for (const auto& g : generators) {
    if (g.rows() != static_cast<Eigen::Index>(d) || !g.is_unitary(1e-10)) {
      throw Error("multiplicative_closure: generator is not a d x d unitary");
    }
    add(g);
  }
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      ComplexMatrix prod = g * f.members[idx];
      add(prod);
    }
  }
  f.weights.assign(f.members.size(), 1.0 / static_cast<double>(f.members.size()));
  return f;
}

UnitaryFamily enumerate_clifford(std::size_t d, std::size_t size_cap) {
  require_supported(d);
  std::vector<ComplexMatrix> gens = {fourier_matrix(d), clifford_phase_gate(d), shift_matrix(d),
                                     clock_matrix(d)};
  UnitaryFamily f = multiplicative_closure(d, gens, size_cap);
  auto check = verify_two_design(f);
  if (!check.passed) {
    throw Error("enumerate_clifford: closure failed the 2-design check (frame potential " +
                std::to_string(check.frame_potential) + ")");
  }
  return f;
}

double frame_potential(const UnitaryFamily& f) {
  if (f.members.empty()) throw Error("frame_potential: empty family");
  double total = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      // tr(g_j^dagger g_k) = sum conj(g_j) .* g_k
      cplx t = (f.members[j].data().conjugate().cwiseProduct(f.members[k].data())).sum();
      double a2 = std::norm(t);
      total += f.weights[j] * f.weights[k] * a2 * a2;
    }
  }
  return total;
}

DesignCheck check_two_design(const UnitaryFamily& f, double tol) {
  DesignCheck c;
  if (f.members.empty() || f.weights.size() != f.members.size()) return c;
  c.unitary = true;
  for (const auto& g : f.members) {
    if (g.rows() != static_cast<Eigen::Index>(f.d) || !g.is_unitary(tol)) c.unitary = false;
  }
  std::map<std::vector<long long>, int> keys;
  c.phase_distinct = true;
  for (const auto& g : f.members) {
    if (!keys.emplace(dedup_key(phase_canonicalize(g)), 0).second) c.phase_distinct = false;
  }
  double wsum = 0.0;
  bool nonneg = true;
  for (double w : f.weights) {
    wsum += w;
    if (w < 0) nonneg = false;
  }
  c.weights_normalized = nonneg && std::abs(wsum - 1.0) <= tol;
  c.frame_potential = frame_potential(f);
  c.passed = c.unitary && c.phase_distinct && c.weights_normalized &&
             std::abs(c.frame_potential - 2.0) <= tol;
  return c;
}

DesignCheck verify_two_design(UnitaryFamily& f, double tol) {
  auto c = check_two_design(f, tol);
  f.verified = c.passed;
  return c;
}

ComplexMatrix conjugate_twirl(const UnitaryFamily& f, const ComplexMatrix& m) {
  const auto d = f.d;
  if (!m.is_square() || m.rows() != static_cast<Eigen::Index>(d * d)) {
    throw Error("conjugate_twirl: matrix must act on two d-dimensional factors");
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& g = f.members[j];
    Eigen::MatrixXcd u = tensor_product(g, g.conjugate()).data();
    acc += f.weights[j] * (u.adjoint() * m.data() * u);
  }
  return {std::move(acc), Dims{d, d}};
}

ComplexMatrix isotropic_projection(const ComplexMatrix& m, std::size_t d) {
  if (!m.is_square() || m.rows() != static_cast<Eigen::Index>(d * d)) {
    throw Error("isotropic_projection: matrix must act on two d-dimensional factors");
  }
  ComplexMatrix phi = max_entangled_projector(d);
  ComplexMatrix rest = ComplexMatrix::identity(Dims{d, d}) - phi;
  cplx on_phi = trace_inner(phi, m);
  cplx on_rest = trace_inner(rest, m) / static_cast<double>(d * d - 1);
  return on_phi * phi + on_rest * rest;
}

std::optional<UnitaryFamily> find_smaller_design(const UnitaryFamily& f, double tol) {
  std::optional<UnitaryFamily> best;
  std::map<std::vector<long long>, int> tried;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a; b < f.size(); ++b) {
      ComplexMatrix gens[] = {f.members[a], f.members[b]};
      UnitaryFamily sub;
      try {
        sub = multiplicative_closure(f.d, gens, f.size());
      } catch (const Error&) {
        continue;
      }
      if (sub.size() >= f.size()) continue;
      if (best && sub.size() >= best->size()) continue;
      // Subgroups are identified by their sorted member keys.
      std::vector<std::vector<long long>> keys;
      for (const auto& g : sub.members) keys.push_back(dedup_key(g));
      std::sort(keys.begin(), keys.end());
      std::vector<long long> flat;
      for (auto& k : keys) flat.insert(flat.end(), k.begin(), k.end());
      if (!tried.emplace(std::move(flat), 0).second) continue;
      if (verify_two_design(sub, tol).passed) best = std::move(sub);
    }
  }
  return best;
}

}  // namespace zec
