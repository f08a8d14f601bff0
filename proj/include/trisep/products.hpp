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
#include <cstdint>
#include <string>
#include <vector>

#include "trisep/linalg.hpp"

namespace trisep {

using Qubit = std::array<cplx, 2>;

/// |x> (x) |y> (x) |z>, times a real scalar carried on the tensor.
struct ProductVector {
  Qubit x{};
  Qubit y{};
  Qubit z{};
  double scale = 1.0;

  /// Computational basis vector |ijk>.
  static ProductVector basis(int i, int j, int k);

  /// The 8-vector scale * x (x) y (x) z, index 4 i_A + 2 i_B + i_C.
  ComplexVector tensor() const;
  double norm_squared() const;
  const Qubit& slot(Party p) const;
  Qubit& slot(Party p);
};

/// (p, q, r), all strictly positive.
struct TripleP {
  double p = 1.0;
  double q = 1.0;
  double r = 1.0;

  /// Throws BadParameter unless p, q, r are positive and finite.
  void validate() const;
};

/// (alpha, beta, gamma) on the unit torus.
struct PhaseTriple {
  cplx alpha;
  cplx beta;
  cplx gamma;

  bool is_unimodular(double tol = 1e-12) const;
};

enum class Surface { S, SA, SB, SC };

/// The four witness triples whose common kill-sets have ten elements.
enum class Triple { WAB, WBC, WCA, ABC };

inline constexpr Triple kTriples[] = {Triple::WAB, Triple::WBC, Triple::WCA, Triple::ABC};

std::string triple_name(Triple t);
/// Parses "WAB", "WBC", "WCA" or "ABC"; throws BadTriple otherwise.
Triple parse_triple(const std::string& name);

/// omega^k with omega = e^{i pi / 4}.
cplx omega_pow(int k);

/// Lambda_1 .. Lambda_8 (index 0..7).
std::array<PhaseTriple, 8> lambda_table();

/// (pqr)^{-1/2} (p, alpha) (x) (q, beta) (x) (r, gamma).
ProductVector eta(const TripleP& p, const PhaseTriple& lambda);
/// eta(p, Lambda_{j+1}) for j = 0..7.
ProductVector eta(const TripleP& p, std::size_t j);

/// Replaces the party's slot v by sigma conj(v).
ProductVector partial_conjugate(const ProductVector& xi, Party party);

/// |defining monomial - u| <= tol * u.
bool surface_membership(const TripleP& p, Surface s, double u, double tol = 1e-12);

/// The point of S cap S_A cap S_B (and analogues) carrying the eight eta
/// vectors of the triple's kill-set.
TripleP triple_point(Triple t, double u);

/// The ten product vectors killed by all three witnesses of the triple:
/// the two computational basis vectors first, then eta_1 .. eta_8.
std::vector<ProductVector> triple_kill_set(Triple t, double u);

/// zeta_1 .. zeta_8, unnormalized, paired with the
/// (W, W_A, W_B) kill-set at p = (1, 1, 1/u).
std::array<ProductVector, 8> zeta_table(double u);

/// |<a|b>| / (|a| |b|) >= 1 - tol, i.e. same ray up to phase and scale.
bool same_ray(std::span<const cplx> a, std::span<const cplx> b, double tol = 1e-9);

/// Outcome of a randomized search for common zeros of a witness triple.
struct KillSetProbe {
  std::size_t starts = 0;
  std::size_t converged = 0;  // local minima with kill value <= accept_tol
  std::size_t matched = 0;    // converged points found in triple_kill_set
  std::vector<std::size_t> hits_per_member;  // length 10
  std::vector<ComplexVector> unmatched;
};

/// Minimizes the summed kill value of the triple over unit product vectors
/// by alternating 2x2 eigen-solves from random starts, and matches every
/// converged zero against triple_kill_set(t, u) up to phase.
KillSetProbe probe_triple_kill_set(Triple t, double u, std::size_t starts,
                                   std::uint64_t seed, double accept_tol = 1e-10,
                                   double match_tol = 1e-6);

}  // namespace trisep
