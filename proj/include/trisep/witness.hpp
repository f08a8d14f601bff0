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
#include <string>

#include "trisep/linalg.hpp"
#include "trisep/products.hpp"
#include "trisep/xstate.hpp"

namespace trisep {

/// The positive bilinear map M_2 x M_2 -> M_2
///
///   ([x_ij], [y_ij]) -> [[ s x22 y11,                       x12y12 - x12y21 + x21y12 + x21y21 ],
///                        [ x12y12 + x12y21 - x21y12 + x21y21, t x11 y22                        ]]
///
/// with s t = 8, parameterized by u > 0.
struct BilinearMapPhi {
  double s = 0;
  double t = 0;

  /// s = sqrt(8) u, t = sqrt(8) / u; this is the assignment under which the
  /// Choi matrix carries sqrt(8)/u at |011><011| and sqrt(8) u at |100><100|.
  static BilinearMapPhi from_u(double u);
};

enum class WitnessLabel { W, WA, WB, WC };

std::string witness_name(WitnessLabel label);

struct Witness {
  XState x;
  double u = 1.0;
  WitnessLabel label = WitnessLabel::W;

  ComplexMatrix dense() const { return to_dense(x); }
};

/// Applies phi to a pair of 2x2 matrices. Throws BadDimension otherwise.
ComplexMatrix phi_apply(const BilinearMapPhi& phi, const ComplexMatrix& x,
                        const ComplexMatrix& y);

/// sum_{i1 j1 i2 j2} |i1><j1| (x) |i2><j2| (x) phi(|i1><j1|, |i2><j2|).
ComplexMatrix choi(const BilinearMapPhi& phi);

/// W, or sigma_P W^{Gamma_P} sigma_P for P = A, B, C, from closed forms.
/// Throws BadParameter for u <= 0.
Witness make_witness(WitnessLabel label, double u);

std::array<WitnessLabel, 3> triple_witnesses(Triple t);

/// Dense sum of the triple's three witnesses.
ComplexMatrix witness_sum(Triple t, double u);

/// <rho, W> = Tr(rho W^t). Throws NonRealPairing if the imaginary part
/// exceeds tol_zero * max(1, |value|).
double pairing(const ComplexMatrix& w, const ComplexMatrix& rho, const Tolerances& tol = {});
double pairing(const Witness& w, const ComplexMatrix& rho, const Tolerances& tol = {});

/// <conj xi| W |conj xi> / <xi|xi>. Throws ZeroVector for xi = 0.
double kill_test(const ComplexMatrix& w, const ProductVector& xi);
double kill_test(const Witness& w, const ProductVector& xi);

/// |kill_test| <= tol_zero.
bool kills(const Witness& w, const ProductVector& xi, const Tolerances& tol = {});

}  // namespace trisep
