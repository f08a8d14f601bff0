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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisep/linalg.hpp"
#include "trisep/products.hpp"
#include "trisep/xstate.hpp"

namespace trisep {

/// X(a_p, b_p, (-1, -1, +1, -1)/sqrt 2), the average of the eight
/// |eta_j(p)><eta_j(p)|. The closed form is only that average when p lies
/// on the surface S; off the surface it is still evaluated.
XState rho_p(const TripleP& p, double u);

/// The X parts shared by eta_1..eta_4 and by eta_5..eta_8.
std::pair<XState, XState> rho_sub_averages(const TripleP& p, double u);

/// (1/|J|) sum_{j in J} |eta_j(p)><eta_j(p)| with the (pqr)^{-1/2} factor
/// kept on each eta; indices are 0-based.
ComplexMatrix eta_average(const TripleP& p, std::span<const std::size_t> indices);

/// The ten pure product states spanning the dual face of a witness triple.
///
/// Index 0 and 1 are the two computational basis vectors of the kill-set,
/// 2..9 are eta_1..eta_8. States are unit-trace projectors.
struct TenStateBasis {
  Triple triple = Triple::WAB;
  double u = 1.0;
  std::vector<ProductVector> vectors;
  std::vector<ComplexMatrix> states;
  ComplexMatrix gram;  // Tr(state_k state_l), real symmetric

  static TenStateBasis make(Triple t, double u);

  std::size_t size() const { return states.size(); }
  /// sum_k w_k state_k
  ComplexMatrix combine(std::span<const double> weights) const;
};

/// Hermitian 8x8 -> 64 reals: real parts of the upper triangle (with the
/// diagonal) followed by imaginary parts of the strict upper triangle.
std::vector<double> vectorize_hermitian(const ComplexMatrix& h);

/// True iff the projectors are linearly independent in the real space of
/// Hermitian matrices: the vectorized rank equals the count and the Gram
/// matrix is nonsingular.
bool simplex_check(const TenStateBasis& basis, const Tolerances& tol = {});

enum class Verdict { InFaceSeparable, CertifiedEntangled, OffHyperplane };

std::string verdict_name(Verdict v);

struct DecompositionCertificate {
  std::vector<double> weights;
  double residual = 0;                      // Frobenius norm
  std::array<double, 3> hyperplane_values{};  // pairings with the triple's witnesses
  Verdict verdict = Verdict::OffHyperplane;
};

/// Thresholds for the three verdicts.
inline constexpr double kDecomposeTol = 1e-8;

/// Unique expansion of rho in the basis through the Gram normal equations.
/// Throws SingularGram if the basis is degenerate.
DecompositionCertificate decompose(const ComplexMatrix& rho, const TenStateBasis& basis,
                                   const Tolerances& tol = {});

/// [<zeta_i|eta_j>] for the unnormalized eta_j(1, 1, 1/u) and
/// zeta_i; with a party given, both families are partially conjugated in
/// that slot first.
ComplexMatrix coefficient_matrix(double u, std::optional<Party> conjugation = std::nullopt);

/// Ranks of the vector sets obtained by dropping elements of a ten-element
/// kill-set, optionally after partial conjugation of every vector.
struct SpanReport {
  std::optional<Party> conjugation;
  std::array<std::size_t, 10> nine_subset_ranks{};  // [k] = rank without vector k
  /// Both basis vectors kept, two of eta_1..eta_4 dropped (6 cases).
  std::vector<std::pair<std::array<std::size_t, 2>, std::size_t>> degenerate_ranks;
  /// Both basis vectors kept, one of eta_1..eta_4 and one of eta_5..eta_8
  /// dropped (16 cases).
  std::vector<std::pair<std::array<std::size_t, 2>, std::size_t>> mixed_ranks;
};

/// Rank of the 8 x |subset| matrix of the (optionally conjugated) vectors.
std::size_t subset_rank(const TenStateBasis& basis, std::span<const std::size_t> subset,
                        std::optional<Party> conjugation = std::nullopt,
                        const Tolerances& tol = {});

/// Reports for no conjugation and for A, B, C.
std::vector<SpanReport> subset_span_report(const TenStateBasis& basis, const Tolerances& tol = {});

}  // namespace trisep
