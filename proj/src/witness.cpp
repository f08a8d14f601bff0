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

#include "trisep/witness.hpp"

#include <cmath>
#include <string>

#include "trisep/errors.hpp"

namespace trisep {

namespace {

const double kSqrt8 = std::sqrt(8.0);

void require_positive_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u))
    throw BadParameter("u must be a positive finite number, got " + std::to_string(u));
}

}  // namespace

BilinearMapPhi BilinearMapPhi::from_u(double u) {
  require_positive_u(u);
  return {kSqrt8 * u, kSqrt8 / u};
}

std::string witness_name(WitnessLabel label) {
  switch (label) {
    case WitnessLabel::W:
      return "W";
    case WitnessLabel::WA:
      return "W_A";
    case WitnessLabel::WB:
      return "W_B";
    case WitnessLabel::WC:
      return "W_C";
  }
  return "?";
}

ComplexMatrix phi_apply(const BilinearMapPhi& phi, const ComplexMatrix& x,
                        const ComplexMatrix& y) {
  if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2)
    throw BadDimension("phi acts on pairs of 2x2 matrices");
  const cplx x11 = x(0, 0), x12 = x(0, 1), x21 = x(1, 0), x22 = x(1, 1);
  const cplx y11 = y(0, 0), y12 = y(0, 1), y21 = y(1, 0), y22 = y(1, 1);
  ComplexMatrix out(2);
  out(0, 0) = phi.s * x22 * y11;
  out(0, 1) = x12 * y12 - x12 * y21 + x21 * y12 + x21 * y21;
  out(1, 0) = x12 * y12 + x12 * y21 - x21 * y12 + x21 * y21;
  out(1, 1) = phi.t * x11 * y22;
  return out;
}

ComplexMatrix choi(const BilinearMapPhi& phi) {
  ComplexMatrix w(8);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          ComplexMatrix e1(2), e2(2);
          e1(i1, j1) = 1.0;
          e2(i2, j2) = 1.0;
          w += kron(kron(e1, e2), phi_apply(phi, e1, e2));
        }
  return w;
}

Witness make_witness(WitnessLabel label, double u) {
  require_positive_u(u);
  const double lo = kSqrt8 / u;
  const double hi = kSqrt8 * u;
  Witness w;
  w.u = u;
  w.label = label;
  w.x.c = {1.0, 1.0, -1.0, 1.0};
  switch (label) {
    case WitnessLabel::W:
      w.x.a = {0, 0, 0, lo};
      w.x.b = {0, 0, 0, hi};
      break;
    case WitnessLabel::WA:
      w.x.a = {hi, 0, 0, 0};
      w.x.b = {lo, 0, 0, 0};
      break;
    case WitnessLabel::WB:
      w.x.a = {0, lo, 0, 0};
      w.x.b = {0, hi, 0, 0};
      break;
    case WitnessLabel::WC:
      w.x.a = {0, 0, lo, 0};
      w.x.b = {0, 0, hi, 0};
      break;
  }
  return w;
}

std::array<WitnessLabel, 3> triple_witnesses(Triple t) {
  using enum WitnessLabel;
  switch (t) {
    case Triple::WAB:
      return {W, WA, WB};
    case Triple::WBC:
      return {W, WB, WC};
    case Triple::WCA:
      return {W, WC, WA};
    case Triple::ABC:
      return {WA, WB, WC};
  }
  throw BadTriple("unknown witness triple");
}

ComplexMatrix witness_sum(Triple t, double u) {
  ComplexMatrix sum(8);
  for (auto label : triple_witnesses(t)) sum += make_witness(label, u).dense();
  return sum;
}

double pairing(const ComplexMatrix& w, const ComplexMatrix& rho, const Tolerances& tol) {
  if (w.rows() != 8 || w.cols() != 8 || rho.rows() != 8 || rho.cols() != 8)
    throw BadDimension("pairing needs two 8x8 matrices");
  // Tr(rho W^t) = sum_ij rho_ij W_ij
  cplx value = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) value += rho(i, j) * w(i, j);
  if (std::abs(value.imag()) > tol.tol_zero * std::max(1.0, std::abs(value)))
    throw NonRealPairing("pairing has imaginary part " + std::to_string(value.imag()));
  return value.real();
}

double pairing(const Witness& w, const ComplexMatrix& rho, const Tolerances& tol) {
  return pairing(w.dense(), rho, tol);
}

double kill_test(const ComplexMatrix& w, const ProductVector& xi) {
  const ComplexVector v = xi.tensor();
  const double nn = std::real(inner(v, v));
  if (!(nn > 0.0)) throw ZeroVector("kill test on the zero vector");
  const ComplexVector vbar = conj(v);
  return std::real(inner(vbar, w * vbar)) / nn;
}

double kill_test(const Witness& w, const ProductVector& xi) {
  return kill_test(w.dense(), xi);
}

bool kills(const Witness& w, const ProductVector& xi, const Tolerances& tol) {
  return std::abs(kill_test(w, xi)) <= tol.tol_zero;
}

}  // namespace trisep
