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

#include "trisep/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trisep/errors.hpp"
#include "trisep/witness.hpp"

namespace trisep {

namespace {

void require_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw BadParameter("u must be positive and finite");
}

std::array<double, 4> a_p(const TripleP& p, double u) {
  return {p.p * p.p / u, p.q * p.q * u, p.r * p.r * u, u};
}

std::array<double, 4> b_p(const TripleP& p, double u) {
  return {u / (p.p * p.p), 1.0 / (p.q * p.q * u), 1.0 / (p.r * p.r * u), 1.0 / u};
}

}  // namespace

XState rho_p(const TripleP& p, double u) {
  p.validate();
  require_u(u);
  const double h = 1.0 / std::numbers::sqrt2;
  return {a_p(p, u), b_p(p, u), {-h, -h, h, -h}};
}

std::pair<XState, XState> rho_sub_averages(const TripleP& p, double u) {
  p.validate();
  require_u(u);
  XState first{a_p(p, u), b_p(p, u),
               {omega_pow(5), omega_pow(3), omega_pow(7), omega_pow(5)}};
  XState second{a_p(p, u), b_p(p, u),
                {omega_pow(3), omega_pow(5), omega_pow(1), omega_pow(3)}};
  return {first, second};
}

ComplexMatrix eta_average(const TripleP& p, std::span<const std::size_t> indices) {
  if (indices.empty()) throw BadParameter("eta_average needs at least one index");
  ComplexMatrix sum(8);
  for (std::size_t j : indices) sum += ComplexMatrix::outer(eta(p, j).tensor());
  return sum * cplx{1.0 / static_cast<double>(indices.size())};
}

TenStateBasis TenStateBasis::make(Triple t, double u) {
  require_u(u);
  TenStateBasis basis;
  basis.triple = t;
  basis.u = u;
  basis.vectors = triple_kill_set(t, u);
  for (const auto& v : basis.vectors) {
    ComplexVector unit = v.tensor();
    const double n = norm(unit);
    for (auto& z : unit) z /= n;
    basis.states.push_back(ComplexMatrix::outer(unit));
  }
  const std::size_t n = basis.states.size();
  basis.gram = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      basis.gram(k, l) = (basis.states[k] * basis.states[l]).trace().real();
  return basis;
}

ComplexMatrix TenStateBasis::combine(std::span<const double> weights) const {
  if (weights.size() != states.size())
    throw BadParameter("expected " + std::to_string(states.size()) + " weights");
  ComplexMatrix rho(8);
  for (std::size_t k = 0; k < states.size(); ++k) rho += states[k] * cplx{weights[k]};
  return rho;
}

std::vector<double> vectorize_hermitian(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<double> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back(h(i, j).real());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(h(i, j).imag());
  return out;
}

bool simplex_check(const TenStateBasis& basis, const Tolerances& tol) {
  const std::size_t n = basis.states.size();
  if (n == 0) return false;
  ComplexMatrix rows(n, 64);
  ComplexMatrix gram(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = vectorize_hermitian(basis.states[k]);
    for (std::size_t c = 0; c < v.size(); ++c) rows(k, c) = v[c];
    for (std::size_t l = 0; l < n; ++l)
      gram(k, l) = (basis.states[k] * basis.states[l]).trace().real();
  }
  return rank(rows, tol) == n && rank(gram, tol) == n;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InFaceSeparable:
      return "in_face_separable";
    case Verdict::CertifiedEntangled:
      return "certified_entangled";
    case Verdict::OffHyperplane:
      return "off_hyperplane";
  }
  return "?";
}

DecompositionCertificate decompose(const ComplexMatrix& rho, const TenStateBasis& basis,
                                   const Tolerances& tol) {
  if (rho.rows() != 8 || rho.cols() != 8) throw BadDimension("decompose needs an 8x8 matrix");
  if (!rho.is_hermitian(tol.tol_sym)) throw NotHermitian("decompose needs a Hermitian matrix");
  const std::size_t n = basis.size();

  ComplexVector rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs[k] = (basis.states[k] * rho).trace().real();
  ComplexVector solution;
  if (!solve_linear(basis.gram, rhs, solution, tol))
    throw SingularGram("Gram matrix of the face basis is singular");

  DecompositionCertificate cert;
  cert.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) cert.weights[k] = solution[k].real();
  cert.residual = (rho - basis.combine(cert.weights)).frobenius_norm();

  const auto labels = triple_witnesses(basis.triple);
  for (std::size_t i = 0; i < 3; ++i)
    cert.hyperplane_values[i] = pairing(make_witness(labels[i], basis.u), rho, tol);

  const double min_weight = *std::min_element(cert.weights.begin(), cert.weights.end());
  const bool on_hyperplane = std::all_of(cert.hyperplane_values.begin(),
                                         cert.hyperplane_values.end(),
                                         [](double v) { return std::abs(v) <= kDecomposeTol; });
  if (cert.residual <= kDecomposeTol && min_weight >= -kDecomposeTol) {
    cert.verdict = Verdict::InFaceSeparable;
  } else if (on_hyperplane) {
    cert.verdict = Verdict::CertifiedEntangled;
  } else {
    cert.verdict = Verdict::OffHyperplane;
  }
  return cert;
}

ComplexMatrix coefficient_matrix(double u, std::optional<Party> conjugation) {
  require_u(u);
  const TripleP point{1.0, 1.0, 1.0 / u};
  const auto zetas = zeta_table(u);
  ComplexMatrix l(8);
  for (std::size_t i = 0; i < 8; ++i) {
    ProductVector zeta = zetas[i];
    if (conjugation) zeta = partial_conjugate(zeta, *conjugation);
    const ComplexVector zv = zeta.tensor();
    for (std::size_t j = 0; j < 8; ++j) {
      ProductVector e = eta(point, j);
      e.scale = 1.0;  // without the (pqr)^{-1/2} factor
      if (conjugation) e = partial_conjugate(e, *conjugation);
      l(i, j) = inner(zv, e.tensor());
    }
  }
  return l;
}

std::size_t subset_rank(const TenStateBasis& basis, std::span<const std::size_t> subset,
                        std::optional<Party> conjugation, const Tolerances& tol) {
  std::vector<ComplexVector> columns;
  for (std::size_t k : subset) {
    if (k >= basis.vectors.size()) throw BadParameter("subset index out of range");
    ProductVector v = basis.vectors[k];
    if (conjugation) v = partial_conjugate(v, *conjugation);
    columns.push_back(v.tensor());
  }
  return rank(ComplexMatrix::from_columns(columns), tol);
}

std::vector<SpanReport> subset_span_report(const TenStateBasis& basis, const Tolerances& tol) {
  const std::optional<Party> conjugations[] = {std::nullopt, Party::A, Party::B, Party::C};
  auto all_but = [](std::initializer_list<std::size_t> dropped) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < 10; ++k)
      if (std::find(dropped.begin(), dropped.end(), k) == dropped.end()) keep.push_back(k);
    return keep;
  };

  std::vector<SpanReport> reports;
  for (const auto& conj : conjugations) {
    SpanReport r;
    r.conjugation = conj;
    for (std::size_t k = 0; k < 10; ++k) r.nine_subset_ranks[k] = subset_rank(basis, all_but({k}), conj, tol);
    // eta_1..eta_4 sit at indices 2..5, eta_5..eta_8 at 6..9.
    for (std::size_t i = 2; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        r.degenerate_ranks.push_back({{i, j}, subset_rank(basis, all_but({i, j}), conj, tol)});
    for (std::size_t i = 2; i < 6; ++i)
      for (std::size_t j = 6; j < 10; ++j)
        r.mixed_ranks.push_back({{i, j}, subset_rank(basis, all_but({i, j}), conj, tol)});
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace trisep
