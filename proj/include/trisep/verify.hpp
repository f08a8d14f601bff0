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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisep/linalg.hpp"

namespace trisep {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::map<std::string, double> measured;
  std::map<std::string, double> tolerances;
  std::string detail;
};

struct Report {
  std::string version = kVersion;
  std::vector<double> us;
  std::uint64_t seed = 42;
  std::vector<CheckRecord> records;

  bool passed() const;
};

/// Every certification check, parameterized by the u values it sweeps.
/// Randomized checks draw from a generator seeded with `seed`, so records
/// are reproducible.
namespace checks {

/// choi(phi(u)) against W(u) written out entry by entry, entrywise within 1e-14.
CheckRecord choi_consistency(const std::vector<double>& us);
/// Closed-form X partial transposes and bit-flips against the generic 8x8
/// operations on `samples` random X matrices, entrywise within 1e-13.
CheckRecord x_calculus(std::uint64_t seed, std::size_t samples = 1000);
/// Ten-element kill-sets killed by their triples (<= 1e-10) and block
/// positivity of all four witnesses on `samples` random product vectors.
CheckRecord kill_sets(const std::vector<double>& us, std::uint64_t seed,
                      std::size_t samples = 10000);
/// rho_p closed form vs eight-average (Frobenius <= 1e-10) on `samples`
/// points of S per u, and full ranks of rho_p and its partial transposes.
CheckRecord rho_p_identity(const std::vector<double>& us, std::uint64_t seed,
                           std::size_t samples = 50);
/// Vectorized rank 10 for all four triples.
CheckRecord simplex(const std::vector<double>& us);
/// Weight recovery (<= 1e-8) and residual (<= 1e-10) for random interior
/// points of every face.
CheckRecord unique_decomposition(const std::vector<double>& us, std::uint64_t seed,
                                 std::size_t samples = 100);
/// Coefficient matrix and its three partially conjugated variants against
/// the reference block patterns, entrywise within 1e-10.
CheckRecord coefficient_matrix_pattern(const std::vector<double>& us);
/// Nine-subset spanning for all triples and conjugations, plus the
/// degenerate (rank <= 7) and mixed (rank 8) eight-subsets.
CheckRecord nine_subset_spanning(const std::vector<double>& us);
/// |<face state, triple sum>| <= 1e-10 for basis states and random mixtures.
CheckRecord hyperplane(const std::vector<double>& us, std::uint64_t seed);
/// Segment extension through a maximal-face interior point (t_star > 1 + 1e-4,
/// PPT certified-entangled midpoint) and through the degenerate 7-simplex
/// facet (t_star <= 1 + 1e-6).
CheckRecord ppt_entanglement(const std::vector<double>& us, std::uint64_t seed);
/// Randomized local search for common zeros of each triple; every zero found
/// must be one of the ten listed vectors.
CheckRecord kill_set_probe(const std::vector<double>& us, std::uint64_t seed,
                           std::size_t starts = 2000);

}  // namespace checks

/// Runs every check at a single u. Throws BadParameter unless
/// 1/16 <= u <= 16.
Report verify_all(double u, std::uint64_t seed);

/// W(u) written out entry by entry, independent of the Choi construction.
ComplexMatrix literal_witness(double u);

}  // namespace trisep
