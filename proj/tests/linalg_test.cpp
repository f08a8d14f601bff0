// Copyright 2026 The trisep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trisep/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "trisep/errors.hpp"
#include "trisep/faces.hpp"
#include "trisep/witness.hpp"
#include "trisep/xstate.hpp"

namespace trisep {
namespace {

ComplexMatrix m2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = {g(rng), g(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(Kron, ProjectorProduct) {
  const double d1[] = {1, 0}, d2[] = {0, 1}, want[] = {0, 1, 0, 0};
  EXPECT_EQ(kron(ComplexMatrix::diagonal(d1), ComplexMatrix::diagonal(d2)), ComplexMatrix::diagonal(want));
}

TEST(Kron, BitFlipSquaredIsIdentity) {
  const ComplexMatrix s = m2(0, 1, 1, 0);
  const ComplexMatrix ss = kron(s, s);
  const ComplexVector v = {1.0, cplx{2, 1}, -3.0, cplx{0, 4}};
  EXPECT_EQ(ss * std::span<const cplx>(ss * v), v);
}

TEST(Kron, RectangularShapes) {
  ComplexMatrix a(2, 3), b(1, 2);
  EXPECT_EQ(kron(a, b).rows(), 2u);
  EXPECT_EQ(kron(a, b).cols(), 6u);
}

TEST(Eigen, DiagonalInput) {
  const double d[] = {3, 1};
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_DOUBLE_EQ(ev[0], 1);
  EXPECT_DOUBLE_EQ(ev[1], 3);
}

TEST(Eigen, BitFlipSpectrum) {
  const auto ev = hermitian_eigenvalues(m2(0, 1, 1, 0));
  EXPECT_NEAR(ev[0], -1, 1e-15);
  EXPECT_NEAR(ev[1], 1, 1e-15);
}

TEST(Eigen, RhoPAtUnitParameter) {
  const auto ev = hermitian_eigenvalues(to_dense(rho_p({1, 1, 1}, 1.0)));
  const double h = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], 1 - h, 1e-13);
  for (int i = 4; i < 8; ++i) EXPECT_NEAR(ev[i], 1 + h, 1e-13);
}

TEST(Eigen, ComplexTwoByTwoAgainstClosedForm) {
  const cplx c{0.3, -1.2};
  const auto ev = hermitian_eigenvalues(m2(2.0, c, std::conj(c), -0.5));
  const auto want = oracle::eig2(2.0, -0.5, c);
  EXPECT_NEAR(ev[0], want[0], 1e-14);
  EXPECT_NEAR(ev[1], want[1], 1e-14);
}

TEST(Eigen, ReconstructionOnRandomHermitian) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 8u, 10u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, n);
      const EigenSystem es = hermitian_eigensystem(h);
      ComplexMatrix lambda(n);
      for (std::size_t i = 0; i < n; ++i) lambda(i, i) = es.values[i];
      const ComplexMatrix back = es.vectors * lambda * es.vectors.adjoint();
      EXPECT_LE((h - back).frobenius_norm(), 1e-10 * std::max(1.0, h.frobenius_norm()));
      EXPECT_LE((es.vectors.adjoint() * es.vectors - ComplexMatrix::identity(n)).max_abs(), 1e-12);
      for (std::size_t i = 1; i < n; ++i) EXPECT_LE(es.values[i - 1], es.values[i]);
    }
  }
}

TEST(Eigen, TraceIsSumOfEigenvalues) {
  std::mt19937_64 rng(5);
  const ComplexMatrix h = random_hermitian(rng, 8);
  double sum = 0;
  for (double v : hermitian_eigenvalues(h)) sum += v;
  EXPECT_NEAR(sum, h.trace().real(), 1e-12);
}

TEST(Eigen, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigenvalues(m2(0, 1, 2, 0)), NotHermitian);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), BadDimension);
}

TEST(Rank, Identity) { EXPECT_EQ(rank(ComplexMatrix::identity(8)), 8u); }

TEST(Rank, WitnessAtUnitParameter) {
  EXPECT_EQ(rank(make_witness(WitnessLabel::W, 1.0).dense()), 8u);
}

TEST(Rank, EtaColumnsFormABasis) {
  std::vector<ComplexVector> cols;
  for (std::size_t j = 0; j < 8; ++j) cols.push_back(eta({1, 1, 1}, j).tensor());
  EXPECT_EQ(rank(ComplexMatrix::from_columns(cols)), 8u);
}

TEST(Rank, DeficientAndRectangular) {
  ComplexMatrix m(3, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    m(0, j) = double(j);
    m(1, j) = 2.0 * double(j);
    m(2, j) = 1.0;
  }
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(ComplexMatrix(4)), 0u);
}

TEST(Psd, Examples) {
  const double d[] = {1, 0};
  EXPECT_TRUE(is_psd(ComplexMatrix::diagonal(d)));
  EXPECT_FALSE(is_psd(m2(0, 1, 1, 0)));
  EXPECT_TRUE(is_psd(to_dense(rho_p({2.0, 0.5, 2.0}, 2.0))));
  EXPECT_THROW(is_psd(m2(0, 1, 0, 0)), NotHermitian);
}

TEST(PartialTranspose, Examples) {
  EXPECT_EQ(partial_transpose(ComplexMatrix::identity(8), Party::A), ComplexMatrix::identity(8));
  ComplexMatrix e(8);
  e(2, 2) = 1;  // |010><010|
  EXPECT_EQ(partial_transpose(e, Party::C), e);
  EXPECT_THROW(partial_transpose(ComplexMatrix(4), Party::A), BadDimension);
}

TEST(PartialTranspose, AgreesWithIndexOracle) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = {g(rng), g(rng)};
  for (Party p : kParties) {
    EXPECT_EQ(oracle::max_diff(oracle::partial_transpose(oracle::from(m), int(party_bit(p))),
                               partial_transpose(m, p)), 0.0);
    EXPECT_EQ(partial_transpose(partial_transpose(m, p), p), m);
  }
}

TEST(PartialTranspose, FullTransposeIsComposition) {
  std::mt19937_64 rng(4);
  const ComplexMatrix h = random_hermitian(rng, 8);
  const ComplexMatrix all = partial_transpose(partial_transpose(partial_transpose(h, Party::A), Party::B), Party::C);
  EXPECT_EQ(all, h.transpose());
}

TEST(BitFlip, IsIndexPermutation) {
  std::mt19937_64 rng(6);
  const ComplexMatrix h = random_hermitian(rng, 8);
  for (Party p : kParties) {
    const ComplexMatrix s = bit_flip(p);
    EXPECT_EQ(oracle::max_diff(oracle::bit_flip(oracle::from(h), int(party_bit(p))), s * h * s), 0.0);
  }
}

TEST(SolveLinear, RecoversSolutionAndFlagsSingular) {
  std::mt19937_64 rng(8);
  const ComplexMatrix h = random_hermitian(rng, 6) + ComplexMatrix::identity(6) * cplx{10.0};
  const ComplexVector x0 = {1.0, -2.0, cplx{0, 1}, 0.5, 3.0, cplx{1, 1}};
  ComplexVector x;
  ASSERT_TRUE(solve_linear(h, h * x0, x));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_LE(std::abs(x[i] - x0[i]), 1e-12);
  EXPECT_FALSE(solve_linear(ComplexMatrix(3), ComplexVector(3), x));
}

TEST(Matrix, HermitianCheckIsRelative) {
  ComplexMatrix m = m2(1e6, 1e6, 1e6 + 1e-5, 1);
  EXPECT_TRUE(m.is_hermitian(1e-10));
  m(1, 0) += 1.0;
  EXPECT_FALSE(m.is_hermitian(1e-10));
}

TEST(Matrix, DimRequiresSquare) { EXPECT_THROW(ComplexMatrix(2, 3).dim(), BadDimension); }

}  // namespace
}  // namespace trisep
