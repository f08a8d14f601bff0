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

#include "trisep/products.hpp"

#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <utility>

#include "trisep/errors.hpp"
#include "trisep/witness.hpp"

namespace trisep {

ProductVector ProductVector::basis(int i, int j, int k) {
  ProductVector v;
  v.x[i & 1] = 1.0;
  v.y[j & 1] = 1.0;
  v.z[k & 1] = 1.0;
  return v;
}

ComplexVector ProductVector::tensor() const {
  ComplexVector out(8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) out[4 * i + 2 * j + k] = scale * x[i] * y[j] * z[k];
  return out;
}

double ProductVector::norm_squared() const {
  auto n2 = [](const Qubit& q) { return std::norm(q[0]) + std::norm(q[1]); };
  return scale * scale * n2(x) * n2(y) * n2(z);
}

const Qubit& ProductVector::slot(Party p) const {
  switch (p) {
    case Party::A:
      return x;
    case Party::B:
      return y;
    case Party::C:
      return z;
  }
  return x;
}

Qubit& ProductVector::slot(Party p) {
  return const_cast<Qubit&>(std::as_const(*this).slot(p));
}

void TripleP::validate() const {
  for (double v : {p, q, r})
    if (!(v > 0.0) || !std::isfinite(v))
      throw BadParameter("p, q, r must be positive finite numbers");
}

bool PhaseTriple::is_unimodular(double tol) const {
  for (const cplx& z : {alpha, beta, gamma})
    if (std::abs(std::abs(z) - 1.0) > tol) return false;
  return true;
}

std::string triple_name(Triple t) {
  switch (t) {
    case Triple::WAB:
      return "WAB";
    case Triple::WBC:
      return "WBC";
    case Triple::WCA:
      return "WCA";
    case Triple::ABC:
      return "ABC";
  }
  return "?";
}

Triple parse_triple(const std::string& name) {
  for (Triple t : kTriples)
    if (triple_name(t) == name) return t;
  throw BadTriple("unknown witness triple '" + name + "' (expected WAB, WBC, WCA or ABC)");
}

cplx omega_pow(int k) {
  k = ((k % 8) + 8) % 8;
  // Exact values on the axes keep the tables free of 1e-17 noise.
  const double h = std::numbers::sqrt2 / 2.0;
  static const cplx table[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
  return table[k];
}

std::array<PhaseTriple, 8> lambda_table() {
  const cplx w3 = omega_pow(3), w1 = omega_pow(1), w7 = omega_pow(7);
  std::array<PhaseTriple, 8> t{};
  t[0] = {w3, w1, w7};
  t[1] = {w3, -w1, -w7};
  t[2] = {-w3, w1, -w7};
  t[3] = {-w3, -w1, w7};
  for (std::size_t j = 4; j < 8; ++j)
    t[j] = {std::conj(t[j - 4].alpha), std::conj(t[j - 4].beta), std::conj(t[j - 4].gamma)};
  return t;
}

ProductVector eta(const TripleP& p, const PhaseTriple& lambda) {
  p.validate();
  ProductVector v;
  v.x = {p.p, lambda.alpha};
  v.y = {p.q, lambda.beta};
  v.z = {p.r, lambda.gamma};
  v.scale = 1.0 / std::sqrt(p.p * p.q * p.r);
  return v;
}

ProductVector eta(const TripleP& p, std::size_t j) {
  if (j >= 8) throw BadParameter("eta index must be in 0..7");
  return eta(p, lambda_table()[j]);
}

ProductVector partial_conjugate(const ProductVector& xi, Party party) {
  ProductVector out = xi;
  const Qubit& v = xi.slot(party);
  out.slot(party) = {std::conj(v[1]), std::conj(v[0])};
  return out;
}

bool surface_membership(const TripleP& p, Surface s, double u, double tol) {
  p.validate();
  double value = 0;
  switch (s) {
    case Surface::S:
      value = p.p / (p.q * p.r);
      break;
    case Surface::SA:
      value = 1.0 / (p.p * p.q * p.r);
      break;
    case Surface::SB:
      value = p.p * p.q / p.r;
      break;
    case Surface::SC:
      value = p.p * p.r / p.q;
      break;
  }
  return std::abs(value - u) <= tol * u;
}

TripleP triple_point(Triple t, double u) {
  if (!(u > 0.0)) throw BadParameter("u must be positive");
  switch (t) {
    case Triple::WAB:
      return {1.0, 1.0, 1.0 / u};
    case Triple::WBC:
      return {u, 1.0, 1.0};
    case Triple::WCA:
      return {1.0, 1.0 / u, 1.0};
    case Triple::ABC:
      return {u, 1.0 / u, 1.0 / u};
  }
  throw BadTriple("unknown witness triple");
}

std::vector<ProductVector> triple_kill_set(Triple t, double u) {
  const TripleP point = triple_point(t, u);
  std::vector<ProductVector> out;
  out.reserve(10);
  switch (t) {
    case Triple::WAB:
      out.push_back(ProductVector::basis(0, 1, 0));
      out.push_back(ProductVector::basis(1, 0, 1));
      break;
    case Triple::WBC:
      out.push_back(ProductVector::basis(0, 0, 0));
      out.push_back(ProductVector::basis(1, 1, 1));
      break;
    case Triple::WCA:
      out.push_back(ProductVector::basis(0, 0, 1));
      out.push_back(ProductVector::basis(1, 1, 0));
      break;
    case Triple::ABC:
      out.push_back(ProductVector::basis(0, 1, 1));
      out.push_back(ProductVector::basis(1, 0, 0));
      break;
  }
  for (std::size_t j = 0; j < 8; ++j) out.push_back(eta(point, j));
  return out;
}

std::array<ProductVector, 8> zeta_table(double u) {
  if (!(u > 0.0)) throw BadParameter("u must be positive");
  const cplx w3 = omega_pow(3), w1 = omega_pow(1), w7 = omega_pow(7);
  auto make = [&](cplx a, cplx b, cplx c) {
    ProductVector v;
    v.x = {1.0, a};
    v.y = {1.0, b};
    v.z = {u, c};
    return v;
  };
  std::array<ProductVector, 8> z{};
  z[0] = make(w3, -w1, w7);
  z[1] = make(w3, w1, -w7);
  z[2] = make(-w3, -w1, -w7);
  z[3] = make(-w3, w1, w7);
  for (std::size_t j = 4; j < 8; ++j) {
    z[j] = z[j - 4];
    for (Party p : kParties)
      for (auto& e : z[j].slot(p)) e = std::conj(e);
  }
  return z;
}

bool same_ray(std::span<const cplx> a, std::span<const cplx> b, double tol) {
  const double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return false;
  return std::abs(inner(a, b)) / (na * nb) >= 1.0 - tol;
}

namespace {

// Lowest eigenvector of the Hermitian 2x2 [[p, w], [conj w, s]].
Qubit lowest_eigenvector(double p, cplx w, double s) {
  const double mean = 0.5 * (p + s);
  const double half = 0.5 * (p - s);
  const double lambda = mean - std::sqrt(half * half + std::norm(w));
  Qubit v1{w, lambda - p};
  Qubit v2{lambda - s, std::conj(w)};
  const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
  const double n2 = std::norm(v2[0]) + std::norm(v2[1]);
  Qubit v = n1 >= n2 ? v1 : v2;
  double n = std::sqrt(std::max(n1, n2));
  if (n == 0.0) return p <= s ? Qubit{1.0, 0.0} : Qubit{0.0, 1.0};
  return {v[0] / n, v[1] / n};
}

// <zeta| M |zeta> restricted to the party's slot: the 2x2 form Q with
// <zeta|M|zeta> = v^dagger Q v where v is that slot of zeta.
std::array<cplx, 4> slot_form(const ComplexMatrix& m, const ProductVector& zeta, Party party) {
  const std::size_t bit = party_bit(party);
  ProductVector rest = zeta;
  rest.slot(party) = {1.0, 1.0};
  const ComplexVector env = rest.tensor();
  std::array<cplx, 4> q{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const std::size_t a = (i & bit) ? 1 : 0;
      const std::size_t b = (j & bit) ? 1 : 0;
      q[2 * a + b] += std::conj(env[i]) * m(i, j) * env[j];
    }
  return q;
}

}  // namespace

KillSetProbe probe_triple_kill_set(Triple t, double u, std::size_t starts, std::uint64_t seed,
                                   double accept_tol, double match_tol) {
  const ComplexMatrix m = witness_sum(t, u);
  const auto members = triple_kill_set(t, u);
  std::vector<ComplexVector> member_tensors;
  for (const auto& v : members) member_tensors.push_back(v.tensor());

  KillSetProbe probe;
  probe.starts = starts;
  probe.hits_per_member.assign(members.size(), 0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_qubit = [&] {
    Qubit q{cplx{gauss(rng), gauss(rng)}, cplx{gauss(rng), gauss(rng)}};
    const double n = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    return Qubit{q[0] / n, q[1] / n};
  };

  constexpr int kMaxSweeps = 400;
  for (std::size_t s = 0; s < starts; ++s) {
    // Minimize <zeta|M|zeta> over unit product vectors zeta = conj(xi).
    ProductVector zeta;
    zeta.x = random_qubit();
    zeta.y = random_qubit();
    zeta.z = random_qubit();
    double value = 0;
    double previous = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      for (Party p : kParties) {
        const auto q = slot_form(m, zeta, p);
        zeta.slot(p) = lowest_eigenvector(q[0].real(), q[1], q[3].real());
      }
      const ComplexVector v = zeta.tensor();
      value = std::real(inner(v, m * v));
      if (value < 1e-15 || (sweep > 0 && previous - value <= 1e-16 * std::max(1.0, previous)))
        break;
      previous = value;
    }
    if (value > accept_tol) continue;
    ++probe.converged;

    const ComplexVector xi = conj(zeta.tensor());
    bool found = false;
    for (std::size_t k = 0; k < member_tensors.size(); ++k) {
      if (same_ray(xi, member_tensors[k], match_tol)) {
        ++probe.hits_per_member[k];
        found = true;
        break;
      }
    }
    if (found) {
      ++probe.matched;
    } else {
      probe.unmatched.push_back(xi);
    }
  }
  return probe;
}

}  // namespace trisep
