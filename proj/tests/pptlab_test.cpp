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

#include "trisep/pptlab.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "trisep/errors.hpp"
#include "trisep/witness.hpp"

namespace trisep {
namespace {

const std::vector<std::size_t> kMaximal010 = {1, 2, 3, 4, 5, 6, 7, 8, 9};
const std::vector<std::size_t> kEtaOnly = {2, 3, 4, 5, 6, 7, 8, 9};
const std::vector<std::size_t> kDegenerate = {0, 1, 4, 5, 6, 7, 8, 9};

ComplexMatrix ghz() {
  ComplexMatrix g(8);
  g(0, 0) = g(0, 7) = g(7, 0) = g(7, 7) = 0.5;
  return g;
}

TEST(IsPpt, Examples) {
  EXPECT_TRUE(is_ppt(ComplexMatrix::identity(8) * cplx{0.125}));
  for (double u : {0.5, 2.0}) {
    const ComplexMatrix r = to_dense(rho_p({u * 1.3 * 0.4, 1.3, 0.4}, u));
    EXPECT_TRUE(is_ppt(r * cplx{1.0 / r.trace().real()}));
  }
  EXPECT_FALSE(is_ppt(ghz()));
  EXPECT_NEAR(hermitian_eigenvalues(partial_transpose(ghz(), Party::A))[0], -0.5, 1e-14);
}

TEST(IsPpt, RejectsNonStates) {
  EXPECT_THROW(is_ppt(ComplexMatrix::identity(8)), NotAState);
  ComplexMatrix neg = ComplexMatrix::identity(8) * cplx{0.25};
  neg(0, 0) = -0.75;
  EXPECT_THROW(is_ppt(neg), NotAState);
  ComplexMatrix skew = ComplexMatrix::identity(8) * cplx{0.125};
  skew(0, 1) = 0.01;
  EXPECT_THROW(is_ppt(skew), NotAState);
  EXPECT_THROW(is_ppt(ComplexMatrix::identity(4) * cplx{0.25}), NotAState);
  EXPECT_FALSE(in_ppt_cone(neg));
}

TEST(IsPpt, ClosedUnderMixing) {
  std::mt19937_64 rng(41);
  const auto basis = TenStateBasis::make(Triple::WBC, 1.4);
  const std::vector<std::size_t> all = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int s = 0; s < 50; ++s) {
    const ComplexMatrix a = basis.combine(sample_face_weights(rng, 10, all));
    const ComplexMatrix b = basis.combine(sample_face_weights(rng, 10, all));
    ASSERT_TRUE(is_ppt(a));
    ASSERT_TRUE(is_ppt(b));
    EXPECT_TRUE(is_ppt((a + b) * cplx{0.5}));
  }
}

class Segment : public ::testing::TestWithParam<Triple> {};

TEST_P(Segment, MaximalFaceExtendsIntoEntangledStates) {
  std::mt19937_64 rng(43);
  const auto basis = TenStateBasis::make(GetParam(), 1.0);
  const ComplexMatrix rho0 = basis.combine(std::vector<double>(10, 0.1));
  const ComplexMatrix rho1 = basis.combine(sample_face_weights(rng, 10, kMaximal010));
  const auto seg = extend_segment(rho0, rho1, basis);
  EXPECT_GT(seg.t_star, 1.0 + 1e-4);
  const double mid = 0.5 * (1 + seg.t_star);
  const ComplexMatrix rho_mid = rho0 * cplx{1 - mid} + rho1 * cplx{mid};
  EXPECT_TRUE(is_ppt(rho_mid));
  const auto cert = decompose(rho_mid, basis);
  EXPECT_EQ(cert.verdict, Verdict::CertifiedEntangled);
  EXPECT_LT(cert.weights[0], -1e-8);

  ASSERT_EQ(seg.probes.size(), 4u);
  for (const auto& p : seg.probes) {
    EXPECT_TRUE(p.ppt);
    EXPECT_EQ(p.certificate.verdict, Verdict::CertifiedEntangled);
  }
  for (const auto& [t, v] : seg.witness_values) EXPECT_NEAR(v, 0.0, 1e-10) << t;
}

TEST_P(Segment, BisectionBracketsTheBoundary) {
  std::mt19937_64 rng(44);
  const auto basis = TenStateBasis::make(GetParam(), 0.7);
  const ComplexMatrix rho0 = basis.combine(std::vector<double>(10, 0.1));
  const ComplexMatrix rho1 = basis.combine(sample_face_weights(rng, 10, kEtaOnly));
  const auto seg = extend_segment(rho0, rho1, basis);
  EXPECT_GT(seg.t_star, 1.0);
  ASSERT_LT(seg.t_star, seg.t_max);
  auto at = [&](double t) { return rho0 * cplx{1 - t} + rho1 * cplx{t}; };
  EXPECT_TRUE(in_ppt_cone(at(seg.t_star - 2e-8), segment_tolerances()));
  EXPECT_FALSE(in_ppt_cone(at(seg.t_star + 2e-8), segment_tolerances()));
}

TEST_P(Segment, DegenerateFacetCannotBeExtended) {
  std::mt19937_64 rng(45);
  for (double u : {0.25, 1.0, 4.0}) {
    const auto basis = TenStateBasis::make(GetParam(), u);
    const ComplexMatrix rho0 = basis.combine(std::vector<double>(10, 0.1));
    const ComplexMatrix rho1 = basis.combine(sample_face_weights(rng, 10, kDegenerate));
    EXPECT_LE(extend_segment(rho0, rho1, basis).t_star, 1.0 + 1e-6) << "u=" << u;
  }
}

INSTANTIATE_TEST_SUITE_P(AllTriples, Segment,
                         ::testing::Values(Triple::WAB, Triple::WBC, Triple::WCA, Triple::ABC),
                         [](const auto& info) { return triple_name(info.param); });

TEST(Segment, RejectsBadEndpoints) {
  const auto basis = TenStateBasis::make(Triple::WAB, 1.0);
  const ComplexMatrix uniform = basis.combine(std::vector<double>(10, 0.1));
  const ComplexMatrix edge = basis.combine(std::vector<double>{0, 0, .125, .125, .125, .125, .125, .125, .125, .125});
  EXPECT_THROW(extend_segment(edge, uniform, basis), BadEndpoints);
  EXPECT_THROW(extend_segment(uniform, ComplexMatrix::identity(8) * cplx{0.125}, basis), BadEndpoints);
  EXPECT_THROW(extend_segment(uniform, edge, basis, 1.0), BadParameter);
}

TEST(Segment, InteriorEndpointStaysInsideUntilCap) {
  // rho1 = rho0: the segment never moves, so the bracket runs to the cap.
  const auto basis = TenStateBasis::make(Triple::WAB, 1.0);
  const ComplexMatrix uniform = basis.combine(std::vector<double>(10, 0.1));
  const auto seg = extend_segment(uniform, uniform, basis, 8.0);
  EXPECT_EQ(seg.t_star, 8.0);
  EXPECT_EQ(seg.t_max, 8.0);
}

TEST(Boundary, Reports) {
  const auto basis = TenStateBasis::make(Triple::WAB, 1.0);
  const auto nine = boundary_state_report(basis, kMaximal010);
  EXPECT_EQ(nine.declared_length, 9u);
  EXPECT_EQ(nine.rank, 8u);
  EXPECT_EQ(nine.partial_transpose_ranks, (std::array<std::size_t, 3>{8, 8, 8}));
  EXPECT_TRUE(nine.full_ranks);

  const auto eta_only = boundary_state_report(basis, kEtaOnly);
  EXPECT_EQ(eta_only.declared_length, 8u);
  EXPECT_TRUE(eta_only.full_ranks);
  for (std::size_t k = 2; k < 10; ++k) EXPECT_NEAR(eta_only.weights[k], 0.125, 1e-12);

  const auto degenerate = boundary_state_report(basis, kDegenerate);
  EXPECT_LT(degenerate.rank, 8u);
  EXPECT_FALSE(degenerate.full_ranks);

  EXPECT_THROW(boundary_state_report(basis, std::vector<std::size_t>{}), EmptyFacet);
}

TEST(SampleWeights, SupportAndFloor) {
  std::mt19937_64 rng(46);
  for (int s = 0; s < 100; ++s) {
    const auto w = sample_face_weights(rng, 10, kDegenerate);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-14);
    EXPECT_EQ(w[2], 0.0);
    EXPECT_EQ(w[3], 0.0);
    for (std::size_t k : kDegenerate) EXPECT_GE(w[k], 0.01);
  }
}

}  // namespace
}  // namespace trisep
