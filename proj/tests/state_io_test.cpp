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


#include "zec/state_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "zec/random.hpp"
#include "zec/samplers.hpp"

namespace zec {
namespace {

BlockStateVector round_trip(const BlockStateVector& psi) {
  std::stringstream s;
  write_block_state(psi, s);
  return read_block_state(s);
}

TEST(StateIo, RoundTripIsBitExact) {
  for (auto [d, n] : {std::pair{2, 1}, {3, 2}}) {
    auto rng = CounterRng::for_case(1, "state-io", d);
    auto psi = random_block_state(rng, d, n);
    auto back = round_trip(psi);
    ASSERT_EQ(back.d(), psi.d());
    ASSERT_EQ(back.n(), psi.n());
    for (std::size_t b = 0; b < psi.num_blocks(); ++b) EXPECT_EQ(back.block(b), psi.block(b));
  }
}

TEST(StateIo, FormatAndMissingTuples) {
  std::istringstream in("zec-block-state 1 2 2\n1 0  0 0  0 0  0.5 -0.5  0 1\n");
  auto psi = read_block_state(in);
  EXPECT_EQ(psi.block(Tuple{1, 0})(2), cplx(0.5, -0.5));
  EXPECT_EQ(psi.block(Tuple{1, 0})(3), cplx(0, 1));
  EXPECT_TRUE(psi.block(Tuple{0, 0}).isZero());
  std::ostringstream out;
  write_block_state(psi, out);
  EXPECT_EQ(out.str().substr(0, 22), "zec-block-state 1 2 2\n");
}

TEST(StateIo, RejectsMalformedInput) {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return read_block_state(in);
  };
  EXPECT_THROW(bad(""), Error);
  EXPECT_THROW(bad("zec-state 1 2 1\n"), Error);
  EXPECT_THROW(bad("zec-block-state 9 2 1\n"), Error);
  EXPECT_THROW(bad("zec-block-state 1 2 1\n2 1 0 0 0\n"), Error);
  EXPECT_THROW(bad("zec-block-state 1 2 1\n0 1 0 0\n"), Error);
  EXPECT_THROW(bad("zec-block-state 1 2 1\n0 1 0 0 0 7\n"), Error);
  EXPECT_THROW(bad("zec-block-state 1 2 1\n0 1 0 0 0\n0 1 0 0 0\n"), Error);
}

}  // namespace
}  // namespace zec
