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


#include "zec/samplers.hpp"

#include <vector>

namespace zec {

namespace {

Eigen::VectorXcd gaussian_block(CounterRng& rng, std::size_t size) {
  return random_gaussian_vector(rng, static_cast<Eigen::Index>(size));
}

// Each tuple goes to alpha (0), beta (1) or neither (2); both states end up nonempty.
std::vector<int> random_partition(CounterRng& rng, std::size_t blocks) {
  std::vector<int> owner(blocks);
  for (auto& o : owner) o = static_cast<int>(rng.below(3));
  std::size_t x = rng.below(blocks);
  std::size_t y = (x + 1 + rng.below(blocks - 1)) % blocks;
  owner[x] = 0;
  owner[y] = 1;
  return owner;
}

std::pair<BlockStateVector, BlockStateVector> partition_pair(CounterRng& rng, std::size_t d,
                                                             std::size_t n,
                                                             std::vector<int>& owner) {
  BlockStateVector a(d, n), b(d, n);
  owner = random_partition(rng, a.num_blocks());
  for (std::size_t i = 0; i < a.num_blocks(); ++i) {
    if (owner[i] == 0) a.block(i) = gaussian_block(rng, a.block_dim());
    if (owner[i] == 1) b.block(i) = gaussian_block(rng, b.block_dim());
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

BlockStateVector random_block_state(CounterRng& rng, std::size_t d, std::size_t n) {
  BlockStateVector s(d, n);
  for (std::size_t i = 0; i < s.num_blocks(); ++i) s.block(i) = gaussian_block(rng, s.block_dim());
  return s.normalized();
}

PairKind pair_kind_at(std::size_t index) { return static_cast<PairKind>(index % kNumPairKinds); }

std::string_view pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::kRandom: return "random";
    case PairKind::kPartition: return "partition";
    case PairKind::kSharedSmall: return "shared-small";
    case PairKind::kMirrored: return "mirrored";
    case PairKind::kProductBasis: return "product-basis";
    case PairKind::kDustPartition: return "dust-partition";
    case PairKind::kOrthogonalDense: return "orthogonal-dense";
  }
  return "unknown";
}

bool pair_kind_is_disjoint(PairKind k) {
  return k == PairKind::kPartition || k == PairKind::kDustPartition;
}

std::pair<BlockStateVector, BlockStateVector> sample_pair(CounterRng& rng, std::size_t d,
                                                          std::size_t n, PairKind kind) {
  std::vector<int> owner;
  switch (kind) {
    case PairKind::kRandom: {
      auto a = random_block_state(rng, d, n);
      auto b = random_block_state(rng, d, n);
      return {std::move(a), std::move(b)};
    }
    case PairKind::kPartition: {
      auto [a, b] = partition_pair(rng, d, n, owner);
      return {a.normalized(), b.normalized()};
    }
    case PairKind::kSharedSmall: {
      auto [a, b] = partition_pair(rng, d, n, owner);
      a = a.normalized();
      b = b.normalized();
      std::size_t t = rng.below(a.num_blocks());
      double eps = 0.05 + 0.25 * rng.uniform();
      Eigen::VectorXcd ga = gaussian_block(rng, a.block_dim());
      Eigen::VectorXcd gb = gaussian_block(rng, b.block_dim());
      a.block(t) += eps * ga / ga.norm();
      b.block(t) += eps * gb / gb.norm();
      return {a.normalized(), b.normalized()};
    }
    case PairKind::kMirrored: {
      auto [a, b] = partition_pair(rng, d, n, owner);
      std::size_t t = rng.below(a.num_blocks());
      Eigen::VectorXcd g = gaussian_block(rng, a.block_dim());
      a.block(t) = g;
      b.block(t) = g;
      return {a.normalized(), b.normalized()};
    }
    case PairKind::kProductBasis: {
      BlockStateVector a(d, n), b(d, n);
      std::size_t i = rng.below(a.num_blocks());
      std::size_t k = rng.below(a.num_blocks());
      Eigen::VectorXcd ga = gaussian_block(rng, a.block_dim());
      Eigen::VectorXcd gb = gaussian_block(rng, b.block_dim());
      a.block(i) = ga / ga.norm();
      b.block(k) = gb / gb.norm();
      return {std::move(a), std::move(b)};
    }
    case PairKind::kDustPartition: {
      auto [a, b] = partition_pair(rng, d, n, owner);
      a = a.normalized();
      b = b.normalized();
      for (std::size_t i = 0; i < a.num_blocks(); ++i) {
        Eigen::VectorXcd g = gaussian_block(rng, a.block_dim());
        g *= 1e-11 / g.norm();
        if (owner[i] != 0) a.block(i) += g;
        if (owner[i] != 1) b.block(i) += g;
      }
      return {std::move(a), std::move(b)};
    }
    case PairKind::kOrthogonalDense: {
      auto a = random_block_state(rng, d, n);
      auto b = random_block_state(rng, d, n);
      cplx ov = inner(a.to_state(), b.to_state());
      b -= ov * a;
      return {std::move(a), b.normalized()};
    }
  }
  throw Error("sample_pair: unknown kind");
}

}  // namespace zec
