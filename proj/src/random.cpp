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


#include "zec/random.hpp"

#include <cmath>
#include <numbers>

namespace zec {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CounterRng CounterRng::for_case(std::uint64_t seed, std::string_view suite,
                                std::uint64_t case_index) {
  std::uint64_t k = mix64(seed);
  k = mix64(k ^ hash_string(suite));
  k = mix64(k ^ mix64(case_index));
  return CounterRng(k);
}

CounterRng::result_type CounterRng::operator()() {
  return mix64(key_ ^ mix64(counter_++ * 0xd1b54a32d192ed03ULL));
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("CounterRng::below: bound must be positive");
  // Rejection sampling removes modulo bias.
  std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

Eigen::VectorXcd random_gaussian_vector(CounterRng& rng, Eigen::Index size) {
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    double re = rng.normal();
    double im = rng.normal();
    v(i) = cplx(re, im);
  }
  return v;
}

PureState random_pure_state(CounterRng& rng, const Dims& dims) {
  Eigen::VectorXcd v = random_gaussian_vector(rng, static_cast<Eigen::Index>(dims_product(dims)));
  return PureState(v / v.norm(), dims);
}

ComplexMatrix random_unitary(CounterRng& rng, std::size_t d) {
  auto n = static_cast<Eigen::Index>(d);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index c = 0; c < n; ++c) g.col(c) = random_gaussian_vector(rng, n);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    cplx diag = r(k, k);
    double a = std::abs(diag);
    if (a > 0) q.col(k) *= diag / a;
  }
  return ComplexMatrix(std::move(q), Dims{d});
}

ComplexMatrix random_density_matrix(CounterRng& rng, const Dims& dims, std::size_t rank) {
  auto side = static_cast<Eigen::Index>(dims_product(dims));
  Eigen::MatrixXcd g(side, static_cast<Eigen::Index>(rank));
  for (Eigen::Index c = 0; c < g.cols(); ++c) g.col(c) = random_gaussian_vector(rng, side);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return ComplexMatrix(std::move(rho), dims);
}

}  // namespace zec
