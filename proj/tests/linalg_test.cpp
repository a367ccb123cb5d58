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


#include "zec/linalg.hpp"

#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "zec/random.hpp"
#include "zec/zero_error.hpp"

namespace zec {
namespace {

ComplexMatrix diag(std::vector<cplx> v) { return ComplexMatrix::diagonal(v); }

TEST(TensorProduct, IdentityTimesIdentity) {
  auto id = ComplexMatrix::identity(Dims{2});
  auto r = tensor_product(id, id);
  EXPECT_EQ(r.dims(), (Dims{2, 2}));
  EXPECT_LE(r.max_abs_diff(ComplexMatrix::identity(Dims{4})), 0.0);
}

TEST(TensorProduct, BasisOrderingLeftFactorMostSignificant) {
  auto r = tensor_product(ket_bra(2, 0, 0), ket_bra(2, 1, 1));
  EXPECT_LE(r.max_abs_diff(diag({0, 1, 0, 0})), 0.0);
}

TEST(TensorProduct, PauliZSquared) {
  auto z = diag({1, -1});
  EXPECT_LE(tensor_product(z, z).max_abs_diff(diag({1, -1, -1, 1})), 0.0);
}

TEST(TensorProduct, StatesMatchMatrixConvention) {
  PureState a(Eigen::Vector2cd(1, 2), Dims{2});
  PureState b(Eigen::Vector3cd(3, 4, 5), Dims{3});
  auto ab = tensor_product(a, b);
  EXPECT_EQ(ab.dims(), (Dims{2, 3}));
  EXPECT_EQ(ab.amplitudes()(4), cplx(8));
}

TEST(TensorProduct, PowerAndRectangular) {
  auto x = shift_matrix(2);
  EXPECT_LE(tensor_power(x, 3).max_abs_diff(tensor_product(x, tensor_product(x, x))), 0.0);
  EXPECT_THROW(tensor_power(x, 0), Error);
  Eigen::MatrixXcd bra = Eigen::MatrixXcd::Ones(1, 2);
  ComplexMatrix r(bra, Dims{1}, Dims{2});
  auto rr = tensor_product(r, ComplexMatrix::identity(Dims{3}));
  EXPECT_EQ(rr.rows(), 3);
  EXPECT_EQ(rr.cols(), 6);
  EXPECT_FALSE(rr.is_square());
}

TEST(PartialTranspose, FlipsFirstFactorIndices) {
  // |01><10| -> |11><00|
  ComplexMatrix m = tensor_product(ket_bra(2, 0, 1), ket_bra(2, 1, 0));
  ComplexMatrix expected = tensor_product(ket_bra(2, 1, 0), ket_bra(2, 1, 0));
  EXPECT_LE(partial_transpose(m, 0).max_abs_diff(expected), 0.0);
}

TEST(PartialTranspose, DiagonalIsFixed) {
  auto m = diag({1, 2, cplx(0, 3), 4});
  m = ComplexMatrix(m.data(), Dims{2, 2});
  EXPECT_LE(partial_transpose(m, 0).max_abs_diff(m), 0.0);
  EXPECT_LE(partial_transpose(m, 1).max_abs_diff(m), 0.0);
}

TEST(PartialTranspose, MaxEntangledSpectrum) {
  for (std::size_t d : {2, 3}) {
    auto ev = hermitian_eigenvalues(partial_transpose(max_entangled_projector(d), 0));
    double inv = 1.0 / static_cast<double>(d);
    std::size_t neg = d * (d - 1) / 2;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      EXPECT_NEAR(ev(i), static_cast<std::size_t>(i) < neg ? -inv : inv, 1e-12);
    }
  }
}

TEST(PartialTranspose, InvolutionOnRandomInputs) {
  for (std::uint64_t c = 0; c < 20; ++c) {
    auto rng = CounterRng::for_case(3, "linalg", c);
    Dims dims{2, 3, 2};
    ComplexMatrix m(random_gaussian_vector(rng, 144).reshaped(12, 12), dims);
    for (std::size_t f = 0; f < 3; ++f) {
      EXPECT_LE(partial_transpose(partial_transpose(m, f), f).max_abs_diff(m), 1e-12);
    }
    std::array<std::size_t, 2> fs = {0, 2};
    auto both = partial_transpose(m, fs);
    EXPECT_LE(both.max_abs_diff(partial_transpose(partial_transpose(m, 0), 2)), 1e-12);
  }
}

TEST(PartialTranspose, RejectsBadFactor) {
  EXPECT_THROW(partial_transpose(max_entangled_projector(2), 2), Error);
}

TEST(PartialTrace, MaxEntangledMarginal) {
  auto r = partial_trace(max_entangled_projector(2), 1);
  EXPECT_LE(r.max_abs_diff(0.5 * ComplexMatrix::identity(Dims{2})), 1e-15);
}

TEST(PartialTrace, ProductRule) {
  auto rng = CounterRng::for_case(1, "linalg", 99);
  auto a = random_density_matrix(rng, Dims{2}, 2);
  auto b = random_density_matrix(rng, Dims{3}, 2);
  a *= 2.5;
  EXPECT_LE(partial_trace(tensor_product(a, b), 0).max_abs_diff(a.trace() * b), 1e-14);
  EXPECT_EQ(partial_trace(tensor_product(a, b), 0).dims(), (Dims{3}));
}

TEST(PartialTrace, PhaseGateOnBasisInputKeepsFlag) {
  // P (I (x) F)|00>, trace over the second factor.
  ComplexMatrix p = diag({1, 1, 1, -1});
  p = ComplexMatrix(p.data(), Dims{2, 2});
  auto u = p * tensor_product(ComplexMatrix::identity(Dims{2}), fourier_matrix(2));
  PureState out(u.data().col(0), Dims{2, 2});
  EXPECT_LE(partial_trace(out.projector(), 1).max_abs_diff(ket_bra(2, 0, 0)), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndOrdersSurvivors) {
  auto rng = CounterRng::for_case(2, "linalg", 0);
  auto m = random_density_matrix(rng, Dims{2, 3, 2}, 4);
  for (std::size_t f = 0; f < 3; ++f) {
    EXPECT_NEAR(std::abs(partial_trace(m, f).trace() - m.trace()), 0.0, 1e-12);
  }
  std::array<std::size_t, 1> mid = {1};
  EXPECT_EQ(partial_trace(m, mid).dims(), (Dims{2, 2}));
  std::array<std::size_t, 3> all = {0, 1, 2};
  auto scalar = partial_trace(m, all);
  EXPECT_EQ(scalar.rows(), 1);
  EXPECT_NEAR(scalar(0, 0).real(), 1.0, 1e-12);
  EXPECT_THROW(partial_trace(m, 3), Error);
}

TEST(PermuteFactors, SwapMatchesReversedKronecker) {
  auto rng = CounterRng::for_case(4, "linalg", 0);
  auto a = random_density_matrix(rng, Dims{2}, 2);
  auto b = random_density_matrix(rng, Dims{3}, 3);
  std::array<std::size_t, 2> swap = {1, 0};
  auto r = permute_factors(tensor_product(a, b), swap);
  EXPECT_EQ(r.dims(), (Dims{3, 2}));
  EXPECT_LE(r.max_abs_diff(tensor_product(b, a)), 1e-15);
  PureState u(Eigen::Vector2cd(1, 2), Dims{2}), v(Eigen::Vector3cd(3, 4, 5), Dims{3});
  auto uv = permute_factors(tensor_product(u, v), swap);
  EXPECT_LE((uv.amplitudes() - tensor_product(v, u).amplitudes()).norm(), 0.0);
}

TEST(EmbedOperator, ActsOnListedFactorsInOrder) {
  auto x = shift_matrix(2);
  auto z = clock_matrix(3);
  Dims dims{3, 2, 2};
  std::array<std::size_t, 2> fs = {2, 0};
  auto r = embed_operator(tensor_product(x, z), fs, dims);
  auto expected = tensor_product(z, tensor_product(ComplexMatrix::identity(Dims{2}), x));
  EXPECT_LE(r.max_abs_diff(expected), 1e-15);
}

TEST(SupportNull, DiagonalProjector) {
  auto [s, n] = support_null(diag({1, 0}));
  ASSERT_EQ(s.dim(), 1u);
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_NEAR(std::abs(s.basis[0].amplitudes()(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(n.basis[0].amplitudes()(1)), 1.0, 1e-15);
}

TEST(SupportNull, MaxEntangledProjector) {
  for (std::size_t d : {2, 3}) {
    auto [s, n] = support_null(max_entangled_projector(d));
    EXPECT_EQ(s.dim(), 1u);
    EXPECT_EQ(n.dim(), d * d - 1);
  }
}

TEST(SupportNull, AOperatorHasOneDimensionalNullSpaceForQubits) {
  auto [s, n] = support_null(build_A(2));
  EXPECT_EQ(n.dim(), 1u);
  EXPECT_EQ(s.dim(), 7u);
}

TEST(SupportNull, ProjectorIdentitiesOnRandomPsd) {
  for (std::uint64_t c = 0; c < 10; ++c) {
    auto rng = CounterRng::for_case(5, "linalg", c);
    auto m = random_density_matrix(rng, Dims{2, 3}, 1 + c % 5);
    auto [s, n] = support_null(m);
    auto ps = s.projector(), pn = n.projector();
    auto id = ComplexMatrix::identity(Dims{2, 3});
    EXPECT_EQ(s.dim() + n.dim(), 6u);
    EXPECT_EQ(s.dim(), 1 + c % 5);
    EXPECT_LE((ps + pn).max_abs_diff(id), 1e-9);
    EXPECT_LE((ps * pn).max_abs_diff(ComplexMatrix::zero(Dims{2, 3})), 1e-9);
    EXPECT_LE((ps * m * ps).max_abs_diff(m), 1e-9);
  }
}

TEST(SupportNull, RejectsNonHermitianAndNegative) {
  EXPECT_THROW(support_null(ket_bra(2, 0, 1)), Error);
  EXPECT_THROW(support_null(diag({1, -0.5})), Error);
}

TEST(TraceInner, Examples) {
  EXPECT_NEAR(trace_inner(ComplexMatrix::identity(Dims{3}), ComplexMatrix::identity(Dims{3})).real(),
              3.0, 1e-15);
  EXPECT_EQ(trace_inner(ket_bra(2, 0, 0), ket_bra(2, 1, 1)), cplx(0));
  auto phi = max_entangled_projector(3);
  auto rest = ComplexMatrix::identity(Dims{3, 3}) - phi;
  EXPECT_NEAR(std::abs(trace_inner(phi, rest)), 0.0, 1e-15);
  EXPECT_THROW(trace_inner(phi, ComplexMatrix::identity(Dims{2})), Error);
}

TEST(TraceInner, SelfInnerIsSquaredFrobeniusAndConjugateSymmetric) {
  for (std::uint64_t c = 0; c < 10; ++c) {
    auto rng = CounterRng::for_case(6, "linalg", c);
    ComplexMatrix a(random_gaussian_vector(rng, 16).reshaped(4, 4), Dims{2, 2});
    ComplexMatrix b(random_gaussian_vector(rng, 16).reshaped(4, 4), Dims{2, 2});
    cplx aa = trace_inner(a, a);
    EXPECT_GE(aa.real(), 0.0);
    EXPECT_NEAR(aa.imag(), 0.0, 1e-12);
    EXPECT_NEAR(aa.real(), a.frobenius_norm() * a.frobenius_norm(), 1e-12);
    EXPECT_NEAR(std::abs(trace_inner(a, b) - std::conj(trace_inner(b, a))), 0.0, 1e-12);
  }
}

TEST(Spectral, TraceNormAndDistance) {
  EXPECT_NEAR(trace_norm(diag({0.5, -0.25})), 0.75, 1e-15);
  EXPECT_NEAR(trace_distance(ket_bra(2, 0, 0), ket_bra(2, 1, 1)), 1.0, 1e-15);
  EXPECT_NEAR(min_eigenvalue(diag({3, -2, 1})), -2.0, 1e-15);
}

TEST(StandardMatrices, WeylRelations) {
  for (std::size_t d : {2, 3}) {
    auto f = fourier_matrix(d), x = shift_matrix(d), z = clock_matrix(d);
    EXPECT_TRUE(f.is_unitary(1e-14));
    EXPECT_LE((f.adjoint() * z * f).max_abs_diff(x), 1e-14);
    EXPECT_LE((z * x).max_abs_diff(root_of_unity(d, 1) * (x * z)), 1e-14);
    EXPECT_LE(clock_power(d, static_cast<long long>(d)).max_abs_diff(ComplexMatrix::identity(Dims{d})),
              1e-14);
    EXPECT_LE(clock_power(d, -1).max_abs_diff(z.adjoint()), 1e-14);
  }
  EXPECT_EQ(root_of_unity(4, 1), cplx(0, 1));
  EXPECT_EQ(root_of_unity(2, 1), cplx(-1, 0));
}

TEST(StandardMatrices, ShiftMovesBasisForward) {
  auto x = shift_matrix(3);
  EXPECT_EQ(x(1, 0), cplx(1));
  EXPECT_EQ(x(0, 2), cplx(1));
}

TEST(PureStateTest, NormalizationAndProjector) {
  PureState zero(Eigen::VectorXcd::Zero(3), Dims{3});
  EXPECT_TRUE(zero.is_normalized_or_zero());
  PureState v(Eigen::Vector3cd(1, cplx(0, 1), 0), Dims{3});
  EXPECT_FALSE(v.is_normalized_or_zero());
  auto nv = v.normalized();
  EXPECT_TRUE(nv.is_normalized_or_zero());
  EXPECT_NEAR(nv.projector().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(nv, nv.conjugate())), 0.0, 1e-15);
  EXPECT_THROW(PureState(Eigen::Vector3cd::Zero(), Dims{2}), Error);
}

TEST(ComplexMatrixTest, ShapeChecks) {
  EXPECT_THROW(ComplexMatrix(Eigen::MatrixXcd::Zero(4, 4), Dims{3}), Error);
  auto a = ComplexMatrix::identity(Dims{2});
  auto b = ComplexMatrix::identity(Dims{3});
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * b, Error);
  EXPECT_TRUE(max_entangled_projector(2).is_hermitian());
  EXPECT_FALSE(ket_bra(2, 0, 1).is_hermitian());
}

}  // namespace
}  // namespace zec
