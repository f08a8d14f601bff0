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

#include "trisep/linalg.hpp"

namespace trisep {

/// An 8x8 three-qubit matrix supported on the diagonal and anti-diagonal.
///
/// Layout in the lexicographic basis (0-based indices):
///   D[k][k]     = a[k]      for k = 0..3
///   D[7-k][7-k] = b[k]      for k = 0..3   (b is stored bottom-up)
///   D[k][7-k]   = c[k],  D[7-k][k] = conj(c[k])
struct XState {
  std::array<double, 4> a{};
  std::array<double, 4> b{};
  std::array<cplx, 4> c{};

  friend bool operator==(const XState&, const XState&) = default;
};

ComplexMatrix to_dense(const XState& x);

/// Strict inverse of to_dense. Throws NotXShaped if any off-pattern entry
/// exceeds tol_zero * max(1, max_abs) or a diagonal entry has an imaginary
/// part above tol_zero, and NotHermitian for non-Hermitian input.
XState from_dense(const ComplexMatrix& rho, const Tolerances& tol = {});

/// Closed-form partial transpose; a and b are untouched.
XState partial_transpose_x(const XState& x, Party party);

/// sigma_P X sigma_P in closed form.
XState bitflip_conjugate_x(const XState& x, Party party);

/// PSD test through the four 2x2 blocks [[a_i, c_i], [conj c_i, b_i]].
bool x_psd_check(const XState& x, const Tolerances& tol = {});

/// a == b and c real, up to tol_zero.
bool is_ghz_diagonal(const XState& x, const Tolerances& tol = {});

/// Sum of the ranks of the four 2x2 blocks.
std::size_t x_block_rank(const XState& x, const Tolerances& tol = {});

double trace(const XState& x);

}  // namespace trisep
