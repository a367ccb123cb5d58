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
#include <string_view>
#include <utility>

#include "zec/channel.hpp"
#include "zec/random.hpp"

namespace zec {

/// Normalized state with Gaussian blocks on every tuple.
BlockStateVector random_block_state(CounterRng& rng, std::size_t d, std::size_t n);

/// Shapes of structured input pairs. Kinds marked "disjoint" never share a
/// nonzero tuple; the others share at least one.
enum class PairKind {
  kRandom,          // both dense: shared support everywhere
  kPartition,       // disjoint: tuples split between the two states
  kSharedSmall,     // partition plus one shared tuple of norm >= 0.05
  kMirrored,        // partition plus a tuple where alpha = beta
  kProductBasis,    // |i>|a> vs |k>|b>, disjoint iff i != k
  kDustPartition,   // disjoint up to 1e-11 dust on the "empty" tuples
  kOrthogonalDense  // dense pair Gram-Schmidt orthogonalized as vectors
};

inline constexpr std::size_t kNumPairKinds = 7;
PairKind pair_kind_at(std::size_t index);
std::string_view pair_kind_name(PairKind k);
/// Whether pairs of this kind are disjoint by construction (kProductBasis
/// depends on the draw and reports false here).
bool pair_kind_is_disjoint(PairKind k);

std::pair<BlockStateVector, BlockStateVector> sample_pair(CounterRng& rng, std::size_t d,
                                                          std::size_t n, PairKind kind);

}  // namespace zec
