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


#include "zec/privacy.hpp"

#include <gtest/gtest.h>

#include "zec/random.hpp"

namespace zec {
namespace {

const NdChannel& channel(std::size_t d) {
  static const NdChannel c2 = build_channel(2, enumerate_clifford(2));
  static const NdChannel c3 = build_channel(3, enumerate_clifford(3));
  return d == 2 ? c2 : c3;
}

TEST(TransposeTrick, HoldsForIdentityFourierDesignAndRandomUnitaries) {
  EXPECT_EQ(transpose_trick_check(ComplexMatrix::identity(Dims{2})), 0.0);
  EXPECT_LE(transpose_trick_check(fourier_matrix(3)), 1e-12);
  double worst = 0.0;
  for (const auto& g : channel(2).design.members) worst = std::max(worst, transpose_trick_check(g));
  EXPECT_LE(worst, 1e-12);
  auto rng = CounterRng::for_case(1, "privacy-test", 0);
  EXPECT_LE(transpose_trick_check(random_unitary(rng, 4)), 1e-12);
  EXPECT_THROW(transpose_trick_check(ComplexMatrix(Eigen::MatrixXcd::Zero(2, 3), Dims{2}, Dims{3})),
               Error);
}

TEST(Protocol, BobDecodesEveryMessageExactly) {
  for (std::size_t d : {2, 3}) {
    for (std::size_t msg = 0; msg < d; ++msg) {
      auto t = run_protocol(channel(d), msg);
      EXPECT_EQ(t.decoded, msg);
      EXPECT_LE(t.bob_error, 1e-12);
      EXPECT_LE(t.bob_output.max_abs_diff(ket_bra(d, msg, msg)), 1e-12);
      EXPECT_NEAR(t.bob_output.trace().real(), 1.0, 1e-12);
    }
  }
  EXPECT_THROW(run_protocol(channel(2), 2), Error);
}

TEST(Protocol, EnvironmentIsIndependentOfMessage) {
  for (std::size_t d : {2, 3}) {
    std::vector<ProtocolTranscript> ts;
    for (std::size_t msg = 0; msg < d; ++msg) ts.push_back(run_protocol(channel(d), msg));
    EXPECT_LE(verify_secrecy(ts), 1e-12);
    // each environment branch is g (I/d) g^dag = I/d
    for (const auto& b : ts[0].eve_branches.branches) {
      EXPECT_LE(b.matrix.max_abs_diff((1.0 / d) * ComplexMatrix::identity(Dims{d})), 1e-12);
    }
  }
}

TEST(Protocol, NonMaximallyEntangledInputLeaks) {
  for (std::size_t d : {2, 3}) {
    std::vector<ProtocolTranscript> ts;
    PureState in = PureState::basis(Dims{d, d}, 0);
    for (std::size_t msg = 0; msg < d; ++msg) ts.push_back(run_protocol(channel(d), msg, in));
    EXPECT_GT(verify_secrecy(ts), 1e-3);
  }
}

TEST(Protocol, SecrecyNeedsEveryMessage) {
  std::vector<ProtocolTranscript> ts = {run_protocol(channel(3), 0), run_protocol(channel(3), 1)};
  EXPECT_THROW(verify_secrecy(ts), Error);
  ts.push_back(run_protocol(channel(3), 1));
  EXPECT_THROW(verify_secrecy(ts), Error);
}

}  // namespace
}  // namespace zec
