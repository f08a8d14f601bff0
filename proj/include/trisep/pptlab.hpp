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
#include <random>
#include <vector>

#include "trisep/faces.hpp"
#include "trisep/linalg.hpp"

namespace trisep {

/// All three partial transposes PSD. Throws NotAState unless rho is a
/// Hermitian PSD matrix of unit trace (trace within 1e-8).
bool is_ppt(const ComplexMatrix& rho, const Tolerances& tol = {});

/// rho PSD and all three partial transposes PSD; never throws on
/// non-states. This is the membership test for the PPT cone.
bool in_ppt_cone(const ComplexMatrix& rho, const Tolerances& tol = {});

inline Tolerances segment_tolerances() {
  Tolerances tol;
  tol.tol_psd = 1e-12;
  return tol;
}

struct SegmentProbe {
  double t = 0;
  bool ppt = false;
  DecompositionCertificate certificate;
};

struct SegmentResult {
  double t_star = 1.0;  // largest t with rho_t in the PPT cone
  double t_max = 2.0;   // final upper bracket (capped at 64)
  std::vector<SegmentProbe> probes;
  std::vector<std::pair<double, double>> witness_values;  // (t, <rho_t, triple sum>)
};

/// Walks rho_t = (1 - t) rho0 + t rho1 past t = 1 and bisects for the
/// boundary of the PPT cone.
///
/// Both endpoints must decompose as in_face_separable and rho0 must have
/// every weight >= 0.01, otherwise BadEndpoints is thrown. The upper
/// bracket starts at 2 and doubles while rho_t stays PPT, up to t_cap.
/// Probes at t = 1 + f (t_star - 1), f in {1/4, 1/2, 3/4, 1}, carry a
/// decomposition certificate each.
///
/// The default tolerances tighten tol_psd to 1e-12: leaving a facet, the
/// smallest eigenvalue can fall off as slowly as 1e-8 per unit of t, so
/// the library-wide 1e-9 would let the walk run past the boundary.
SegmentResult extend_segment(const ComplexMatrix& rho0, const ComplexMatrix& rho1,
                             const TenStateBasis& basis, double t_cap = 64.0,
                             double bisect_tol = 1e-8,
                             const Tolerances& tol = segment_tolerances());

struct BoundaryReport {
  std::vector<std::size_t> facet;
  ComplexMatrix state;
  std::size_t rank = 0;
  std::array<std::size_t, 3> partial_transpose_ranks{};
  std::vector<double> weights;
  std::size_t declared_length = 0;
  bool full_ranks = false;
};

/// Analyzes the uniform mixture of the facet's states. The declared length
/// is the facet size, which the simplex structure makes exact.
/// Throws EmptyFacet for an empty selector.
BoundaryReport boundary_state_report(const TenStateBasis& basis,
                                     std::span<const std::size_t> facet,
                                     const Tolerances& tol = {});

/// Weights on the given support: floor + (1 - |support| floor) times a
/// flat Dirichlet sample, zero elsewhere. Length n.
std::vector<double> sample_face_weights(std::mt19937_64& rng, std::size_t n,
                                        std::span<const std::size_t> support,
                                        double floor = 0.01);

}  // namespace trisep
