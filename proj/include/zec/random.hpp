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

#include <cstdint>
#include <limits>
#include <string_view>

#include <Eigen/Dense>

#include "zec/linalg.hpp"

namespace zec {

/// Counter-based generator: output k is a keyed 64-bit mix of k, so any
/// stream is fully determined by its key and needs no shared state.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}
  /// Stream for case `case_index` of suite `suite` under a run seed.
  static CounterRng for_case(std::uint64_t seed, std::string_view suite, std::uint64_t case_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; independent of the standard library's
  /// distribution implementations so streams are portable.
  double normal();
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_string(std::string_view s);

/// Complex Gaussian vector (i.i.d. real and imaginary parts).
Eigen::VectorXcd random_gaussian_vector(CounterRng& rng, Eigen::Index size);
/// Unit vector drawn uniformly from the sphere.
PureState random_pure_state(CounterRng& rng, const Dims& dims);
/// Haar-random unitary via QR of a Ginibre matrix with phase correction.
ComplexMatrix random_unitary(CounterRng& rng, std::size_t d);
/// G G^dagger / tr(G G^dagger) with G of shape side x rank.
ComplexMatrix random_density_matrix(CounterRng& rng, const Dims& dims, std::size_t rank);

}  // namespace zec
