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

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "zec/samplers.hpp"

namespace zec {
namespace {

// <x|A^(x)n|x> with A^(x)n materialized and |x> reordered to (i_1 a_1 b_1 i_2 a_2 b_2 ...).
double materialized_overlap(const BlockStateVector& p1, const BlockStateVector& p2) {
  const std::size_t d = p1.d(), n = p1.n();
  PureState x = build_x(p1, p2);
  PureState split(x.amplitudes(), Dims(3 * n, d));
  std::vector<std::size_t> perm;
  for (std::size_t t = 0; t < n; ++t) {
    perm.push_back(t);
    perm.push_back(n + t);
    perm.push_back(2 * n + t);
  }
  PureState y = permute_factors(split, perm);
  Eigen::VectorXcd ay = tensor_power(build_A(d), n).data() * y.amplitudes();
  return y.amplitudes().dot(ay).real();
}

TEST(BuildA, QubitCoefficients) {
  auto a = a_coefficients(2);
  EXPECT_EQ(a(0, 0), cplx(1));
  EXPECT_NEAR(a(0, 1).real(), -1.0 / 3.0, 1e-16);
  EXPECT_NEAR(a(1, 0).real(), -1.0 / 3.0, 1e-16);
  EXPECT_EQ(build_A(2).dims(), (Dims{2, 2, 2}));
}

TEST(BuildA, MatchesDesignAverage) {
  for (std::size_t d : {2, 3}) {
    EXPECT_LE(average_A_over_design(enumerate_clifford(d)).max_abs_diff(build_A(d)), 1e-9);
  }
}

TEST(BuildA, HermitianPsdWithOracleRank) {
  for (std::size_t d : {2, 3}) {
    auto a = build_A(d);
    EXPECT_TRUE(a.is_hermitian(1e-15));
    EXPECT_GE(min_eigenvalue(a), -1e-9);
    auto [s, nul] = support_null(a);
    EXPECT_EQ(s.dim(), d == 2 ? oracle::kRankAD2 : oracle::kRankAD3);
    EXPECT_EQ(nul.dim(), d - 1);
  }
}

TEST(BuildA, SupportProjectorMatchesClosedForm) {
  for (std::size_t d : {2, 3}) {
    auto p = a_support_projector(d);
    EXPECT_LE((p * p).max_abs_diff(p), 1e-14);
    EXPECT_TRUE(p.is_hermitian(1e-15));
    EXPECT_LE(support_null(build_A(d)).first.projector().max_abs_diff(p), 1e-9);
  }
}

TEST(BuildA, NullVectorsAreMuTimesPhi) {
  for (std::size_t d : {2, 3}) {
    auto a = build_A(d);
    auto phi = max_entangled_state(d);
    for (std::size_t k = 1; k < d; ++k) {
      PureState mu(fourier_matrix(d).data().col(static_cast<Eigen::Index>(k)), Dims{d});
      EXPECT_LE((a.data() * tensor_product(mu, phi).amplitudes()).norm(), 1e-10);
    }
  }
}

// The literal bound A >= I (x) (I - Phi) fails: its minimum eigenvalue is -1/(d+1).
// The sharp constant is the smallest eigenvalue of the coefficient matrix, d/(d+1).
TEST(BuildA, DominanceConstant) {
  for (std::size_t d : {2, 3}) {
    auto rest = ComplexMatrix::identity(Dims{d, d}) - max_entangled_projector(d);
    auto floor = tensor_product(ComplexMatrix::identity(Dims{d}), rest);
    auto a = build_A(d);
    double literal = d == 2 ? oracle::kMinEigAMinusFloorD2 : oracle::kMinEigAMinusFloorD3;
    double coef = d == 2 ? oracle::kMinEigACoefficientsD2 : oracle::kMinEigACoefficientsD3;
    EXPECT_NEAR(min_eigenvalue(a - floor), literal, 1e-12);
    EXPECT_NEAR(min_eigenvalue(a_coefficients(d)), coef, 1e-12);
    EXPECT_GE(min_eigenvalue(a - coef * floor), -1e-9);
    EXPECT_LT(min_eigenvalue(a - (coef + 1e-3) * floor), -1e-6);
  }
}

TEST(OverlapViaA, Examples) {
  BlockStateVector p1(2, 2), p2(2, 2);
  p1.block(Tuple{0, 0}) = Eigen::Vector4cd(0.5, 0.5, 0.5, 0.5);
  p2.block(Tuple{1, 0}) = Eigen::Vector4cd(1, 0, 0, 0);
  p2.block(Tuple{1, 1}) = Eigen::Vector4cd(0, 0, 0, 1);
  p2 = p2.normalized();
  EXPECT_TRUE(disjoint_support(p1, p2));
  EXPECT_NEAR(overlap_via_A(p1, p2), 0.0, 1e-12);
  EXPECT_NEAR(overlap_via_A(p1, p1), 1.0, 1e-12);
  p2.block(Tuple{0, 0}) = Eigen::Vector4cd(0.1, 0, 0, 0);
  EXPECT_FALSE(disjoint_support(p1, p2));
  EXPECT_THROW(overlap_via_A(p1, BlockStateVector(2, 1)), Error);
}

TEST(OverlapViaA, MatchesMaterializedOperatorAndOracle) {
  struct Case {
    std::size_t d, n;
    double pair, self;
  };
  for (auto cs : {Case{2, 1, oracle::kPairOverlapD2N1, oracle::kSelfOverlapD2N1},
                  Case{2, 2, oracle::kPairOverlapD2N2, oracle::kSelfOverlapD2N2},
                  Case{3, 1, oracle::kPairOverlapD3N1, oracle::kSelfOverlapD3N1}}) {
    auto p1 = oracle::fixed_state(cs.d, cs.n, 0.3, 0.7, 1.1);
    auto p2 = oracle::fixed_state(cs.d, cs.n, -0.4, 0.2, 0.9);
    EXPECT_NEAR(overlap_via_A(p1, p2), cs.pair, 1e-12);
    EXPECT_NEAR(overlap_via_A(p1, p1), cs.self, 1e-12);
    EXPECT_NEAR(materialized_overlap(p1, p2), cs.pair, 1e-12);
  }
  for (std::uint64_t t = 0; t < 5; ++t) {
    auto rng = CounterRng::for_case(1, "zero-error-test", t);
    auto [p1, p2] = sample_pair(rng, 3, 2, PairKind::kRandom);
    EXPECT_NEAR(overlap_via_A(p1, p2), materialized_overlap(p1, p2), 1e-12);
  }
}

TEST(OverlapViaA, SymmetryScalingAndNonnegativity) {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = CounterRng::for_case(2, "zero-error-test", t);
      auto [p1, p2] = sample_pair(rng, d, n, pair_kind_at(t));
      double v = overlap_via_A(p1, p2);
      EXPECT_GE(v, -1e-12);
      EXPECT_NEAR(v, overlap_via_A(p2, p1), 1e-10);
      cplx c(0.7, -1.3);
      EXPECT_NEAR(overlap_via_A(c * p1, p2), std::norm(c) * v, 1e-10);
    }
  }
}

TEST(BuildX, ConjugatesSecondBlock) {
  BlockStateVector p1(2, 1), p2(2, 1);
  p1.block(1) = Eigen::Vector2cd(1, 0);
  p2.block(1) = Eigen::Vector2cd(0, cplx(0, 1));
  auto x = build_x(p1, p2);
  EXPECT_EQ(x.dims(), (Dims{2, 2, 2}));
  // |1>|0>|1> with amplitude conj(i) = -i
  EXPECT_EQ(x.amplitudes()(5), cplx(0, -1));
  EXPECT_NEAR(x.norm(), 1.0, 1e-15);
}

TEST(SupportOverlapEquivalence, DisjointSupportIffZeroOverlap) {
  for (auto [d, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    for (std::uint64_t t = 0; t < 250; ++t) {
      auto rng = CounterRng::for_case(3, "zero-error-test", t);
      auto kind = t < 200 ? PairKind::kRandom : pair_kind_at(t);
      auto [p1, p2] = sample_pair(rng, d, n, kind);
      ASSERT_EQ(disjoint_support(p1, p2), std::abs(overlap_via_A(p1, p2)) <= kOverlapTol)
          << "d=" << d << " n=" << n << " case " << t;
    }
  }
}

TEST(OrthogonalityCriterion, Examples) {
  BlockStateVector p1(2, 1), p2(2, 1);
  p1.block(0) = Eigen::Vector2cd(1, 0);
  p2.block(1) = Eigen::Vector2cd(0, 1);
  auto r = lemma1_criterion(p1, p2);
  EXPECT_TRUE(r.orthogonal);
  EXPECT_FALSE(r.pm_orthogonal);
  EXPECT_FALSE(r.transmits_qubit());
  EXPECT_FALSE(r.degenerate);

  p2.block(0) = Eigen::Vector2cd(0, 0.5);
  r = lemma1_criterion(p1, p2.normalized());
  EXPECT_FALSE(r.orthogonal);

  BlockStateVector z(2, 1);
  r = lemma1_criterion(z, z);
  EXPECT_TRUE(r.transmits_qubit());
  EXPECT_TRUE(r.degenerate);
}

TEST(QubitCode, NoneAmongCandidates) {
  for (std::size_t n : {1, 2}) {
    for (std::uint64_t t = 0; t < 500; ++t) {
      auto rng = CounterRng::for_case(4, "zero-error-test", t);
      auto [p1, p2] = sample_pair(rng, 2, n, pair_kind_at(t));
      auto r = lemma1_criterion(p1, p2);
      ASSERT_FALSE(r.transmits_qubit() && !r.degenerate);
    }
  }
}

TEST(OrthogonalityReportTest, RoutesAgree) {
  auto c = build_channel(2, enumerate_clifford(2));
  for (std::uint64_t t = 0; t < 14; ++t) {
    auto rng = CounterRng::for_case(5, "zero-error-test", t);
    auto [p1, p2] = sample_pair(rng, 2, 1, pair_kind_at(t));
    auto r = orthogonality_report(c, p1, p2);
    EXPECT_TRUE(r.agree);
    EXPECT_NEAR(r.overlap_value, r.a_form_value, 1e-8);
    EXPECT_EQ(r.disjoint_support, disjoint_support(p1, p2));
  }
}

}  // namespace
}  // namespace zec
