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

#include <gtest/gtest.h>

#include "oracle_values.hpp"

namespace zec {
namespace {

class GraphTest : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    d_ = GetParam();
    channel_ = build_channel(d_, enumerate_clifford(d_));
    graph_ = graph_span(channel_);
  }
  std::size_t d_ = 0;
  NdChannel channel_;
  OperatorSpan graph_;
};

TEST_P(GraphTest, FactorSpanDimensions) {
  for (std::size_t k = 0; k < d_; ++k) {
    for (std::size_t l = 0; l < d_; ++l) {
      EXPECT_EQ(factor_span(channel_, k, l).dim(), k == l ? d_ * d_ : d_ * d_ - 1);
    }
  }
}

TEST_P(GraphTest, DimensionMatchesOracleAndCount) {
  EXPECT_EQ(graph_.dim(), d_ == 2 ? oracle::kGraphDimD2 : oracle::kGraphDimD3);
  EXPECT_EQ(graph_.dim(), d_ * d_ + (d_ - 1) * (d_ * d_ - 1));
  EXPECT_EQ(graph_.ambient_dim(), d_ * d_ * d_ * d_);
}

TEST_P(GraphTest, BasisIsOrthonormal) {
  for (std::size_t i = 0; i < graph_.dim(); ++i) {
    for (std::size_t j = 0; j < graph_.dim(); ++j) {
      EXPECT_NEAR(std::abs(trace_inner(graph_.basis[i], graph_.basis[j])), i == j ? 1.0 : 0.0, 1e-9);
    }
  }
}

TEST_P(GraphTest, Memberships) {
  auto z = clock_matrix(d_);
  auto id = ComplexMatrix::identity(Dims{d_});
  EXPECT_FALSE(contains(graph_, tensor_product(z, id)));
  EXPECT_TRUE(contains(graph_, tensor_product(id, z)));
  EXPECT_TRUE(contains(graph_, tensor_product(z, z.adjoint())));
  EXPECT_TRUE(contains(graph_, tensor_product(id, id)));
  EXPECT_THROW(contains(graph_, id), Error);
}

TEST_P(GraphTest, ConditionsViolatedAndFullSpaceControl) {
  auto v = condition_checks(graph_, d_);
  EXPECT_TRUE(v.a_violated);
  EXPECT_TRUE(v.b_violated);
  auto full = condition_checks(full_matrix_space(Dims{d_, d_}), d_);
  EXPECT_FALSE(full.a_violated);
  EXPECT_FALSE(full.b_violated);
}

TEST_P(GraphTest, AdjointClosed) {
  for (const auto& b : graph_.basis) EXPECT_TRUE(contains(graph_, b.adjoint()));
}

TEST_P(GraphTest, KrausOperatorsAreAnIsometry) {
  auto kraus = kraus_operators(channel_);
  ASSERT_EQ(kraus.size(), channel_.design.size() * d_);
  ComplexMatrix sum = ComplexMatrix::zero(Dims{d_, d_});
  for (const auto& e : kraus) {
    EXPECT_EQ(e.rows(), static_cast<Eigen::Index>(d_));
    ComplexMatrix p = e.adjoint() * e;
    sum += ComplexMatrix(p.data(), Dims{d_, d_});
  }
  EXPECT_LE(sum.max_abs_diff(ComplexMatrix::identity(Dims{d_, d_})), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Dims, GraphTest, ::testing::Values(2, 3));

TEST(GraphSpan, SameDimensionForQubitSubgroupDesign) {
  auto full = enumerate_clifford(2);
  auto sub = find_smaller_design(full);
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(graph_span(build_channel(2, *sub)).dim(), graph_span(build_channel(2, full)).dim());
}

TEST(SpanOf, DropsDependentVectors) {
  std::vector<ComplexMatrix> ms = {ket_bra(2, 0, 0), ket_bra(2, 1, 1),
                                   ComplexMatrix::identity(Dims{2}), ket_bra(2, 0, 1)};
  auto s = span_of(ms, Dims{2});
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(contains(s, ComplexMatrix::identity(Dims{2})));
  EXPECT_FALSE(contains(s, ket_bra(2, 1, 0)));
  EXPECT_LE(s.project(ket_bra(2, 1, 0)).frobenius_norm(), 1e-12);
}

}  // namespace
}  // namespace zec
