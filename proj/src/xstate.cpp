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

#include "trisep/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trisep/errors.hpp"

namespace trisep {

ComplexMatrix to_dense(const XState& x) {
  ComplexMatrix d(8);
  for (std::size_t k = 0; k < 4; ++k) {
    d(k, k) = x.a[k];
    d(7 - k, 7 - k) = x.b[k];
    d(k, 7 - k) = x.c[k];
    d(7 - k, k) = std::conj(x.c[k]);
  }
  return d;
}

XState from_dense(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.rows() != 8 || rho.cols() != 8) throw BadDimension("X-state must be 8x8");
  if (!rho.is_hermitian(tol.tol_sym)) throw NotHermitian("X-state must be Hermitian");
  const double limit = tol.tol_zero * std::max(1.0, rho.max_abs());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j || i + j == 7) continue;
      if (std::abs(rho(i, j)) > limit) {
        throw NotXShaped("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is off the X pattern");
      }
    }
  XState x;
  for (std::size_t k = 0; k < 8; ++k)
    if (std::abs(rho(k, k).imag()) > tol.tol_zero)
      throw NotXShaped("diagonal entry " + std::to_string(k) + " is not real");
  for (std::size_t k = 0; k < 4; ++k) {
    x.a[k] = rho(k, k).real();
    x.b[k] = rho(7 - k, 7 - k).real();
    x.c[k] = rho(k, 7 - k);
  }
  return x;
}

XState partial_transpose_x(const XState& x, Party party) {
  XState out = x;
  const auto& c = x.c;
  switch (party) {
    case Party::A:
      out.c = {std::conj(c[3]), std::conj(c[2]), std::conj(c[1]), std::conj(c[0])};
      break;
    case Party::B:
      out.c = {c[2], c[3], c[0], c[1]};
      break;
    case Party::C:
      out.c = {c[1], c[0], c[3], c[2]};
      break;
  }
  return out;
}

XState bitflip_conjugate_x(const XState& x, Party party) {
  const auto& [a, b, c] = x;
  switch (party) {
    case Party::A:
      return {{b[3], b[2], b[1], b[0]},
              {a[3], a[2], a[1], a[0]},
              {std::conj(c[3]), std::conj(c[2]), std::conj(c[1]), std::conj(c[0])}};
    case Party::B:
      return {{a[2], a[3], a[0], a[1]}, {b[2], b[3], b[0], b[1]}, {c[2], c[3], c[0], c[1]}};
    case Party::C:
      return {{a[1], a[0], a[3], a[2]}, {b[1], b[0], b[3], b[2]}, {c[1], c[0], c[3], c[2]}};
  }
  return x;
}

bool x_psd_check(const XState& x, const Tolerances& tol) {
  for (std::size_t i = 0; i < 4; ++i) {
    const double ab = x.a[i] * x.b[i];
    if (x.a[i] < -tol.tol_psd || x.b[i] < -tol.tol_psd) return false;
    if (ab - std::norm(x.c[i]) < -tol.tol_psd * std::max(1.0, ab)) return false;
  }
  return true;
}

bool is_ghz_diagonal(const XState& x, const Tolerances& tol) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(x.a[i] - x.b[i]) > tol.tol_zero) return false;
    if (std::abs(x.c[i].imag()) > tol.tol_zero) return false;
  }
  return true;
}

std::size_t x_block_rank(const XState& x, const Tolerances& tol) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ComplexMatrix block(2);
    block(0, 0) = x.a[i];
    block(0, 1) = x.c[i];
    block(1, 0) = std::conj(x.c[i]);
    block(1, 1) = x.b[i];
    r += rank(block, tol);
  }
  return r;
}

double trace(const XState& x) {
  double t = 0;
  for (std::size_t i = 0; i < 4; ++i) t += x.a[i] + x.b[i];
  return t;
}

}  // namespace trisep
