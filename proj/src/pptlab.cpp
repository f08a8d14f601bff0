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

#include "trisep/pptlab.hpp"

#include <algorithm>
#include <cmath>

#include "trisep/errors.hpp"
#include "trisep/witness.hpp"

namespace trisep {

bool is_ppt(const ComplexMatrix& rho, const Tolerances& tol) {
  if (rho.rows() != 8 || rho.cols() != 8) throw NotAState("state must be 8x8");
  if (!rho.is_hermitian(tol.tol_sym)) throw NotAState("state is not Hermitian");
  if (std::abs(rho.trace() - cplx{1.0}) > 1e-8) throw NotAState("state trace is not 1");
  if (!is_psd(rho, tol)) throw NotAState("state is not positive semidefinite");
  return std::all_of(std::begin(kParties), std::end(kParties),
                     [&](Party p) { return is_psd(partial_transpose(rho, p), tol); });
}

bool in_ppt_cone(const ComplexMatrix& rho, const Tolerances& tol) {
  if (!is_psd(rho, tol)) return false;
  return std::all_of(std::begin(kParties), std::end(kParties),
                     [&](Party p) { return is_psd(partial_transpose(rho, p), tol); });
}

SegmentResult extend_segment(const ComplexMatrix& rho0, const ComplexMatrix& rho1,
                             const TenStateBasis& basis, double t_cap, double bisect_tol,
                             const Tolerances& tol) {
  const auto c0 = decompose(rho0, basis, tol);
  const auto c1 = decompose(rho1, basis, tol);
  if (c0.verdict != Verdict::InFaceSeparable || c1.verdict != Verdict::InFaceSeparable)
    throw BadEndpoints("segment endpoints must be separable states in the face");
  if (*std::min_element(c0.weights.begin(), c0.weights.end()) < 0.01)
    throw BadEndpoints("starting point must be interior (all weights >= 0.01)");
  if (!(t_cap >= 2.0) || !(bisect_tol > 0.0))
    throw BadParameter("need t_cap >= 2 and a positive bisection tolerance");

  auto at = [&](double t) { return rho0 * cplx{1.0 - t} + rho1 * cplx{t}; };
  const ComplexMatrix sum = witness_sum(basis.triple, basis.u);

  SegmentResult result;
  double lo = 1.0;
  double hi = 2.0;
  while (in_ppt_cone(at(hi), tol)) {
    lo = hi;
    if (hi >= t_cap) break;
    hi = std::min(2.0 * hi, t_cap);
  }
  result.t_max = hi;
  if (lo < hi) {
    while (hi - lo > bisect_tol) {
      const double mid = 0.5 * (lo + hi);
      (in_ppt_cone(at(mid), tol) ? lo : hi) = mid;
    }
  }
  result.t_star = lo;

  for (double f : {0.25, 0.5, 0.75, 1.0}) {
    const double t = 1.0 + f * (result.t_star - 1.0);
    const ComplexMatrix rho_t = at(t);
    result.probes.push_back({t, in_ppt_cone(rho_t, tol), decompose(rho_t, basis, tol)});
  }
  for (double t : {0.0, 0.5, 1.0, 0.5 * (1.0 + result.t_star), result.t_star})
    result.witness_values.emplace_back(t, pairing(sum, at(t), tol));
  return result;
}

BoundaryReport boundary_state_report(const TenStateBasis& basis,
                                     std::span<const std::size_t> facet,
                                     const Tolerances& tol) {
  if (facet.empty()) throw EmptyFacet("facet selector is empty");
  std::vector<double> weights(basis.size(), 0.0);
  for (std::size_t k : facet) {
    if (k >= basis.size()) throw BadParameter("facet index out of range");
    weights[k] = 1.0;
  }
  const double count = static_cast<double>(std::count(weights.begin(), weights.end(), 1.0));
  for (auto& w : weights) w /= count;

  BoundaryReport report;
  report.facet.assign(facet.begin(), facet.end());
  std::sort(report.facet.begin(), report.facet.end());
  report.facet.erase(std::unique(report.facet.begin(), report.facet.end()), report.facet.end());
  report.state = basis.combine(weights);
  report.rank = rank(report.state, tol);
  for (std::size_t i = 0; i < 3; ++i)
    report.partial_transpose_ranks[i] = rank(partial_transpose(report.state, kParties[i]), tol);
  report.weights = decompose(report.state, basis, tol).weights;
  report.declared_length = report.facet.size();
  report.full_ranks = report.rank == 8 &&
                      std::all_of(report.partial_transpose_ranks.begin(),
                                  report.partial_transpose_ranks.end(),
                                  [](std::size_t r) { return r == 8; });
  return report;
}

std::vector<double> sample_face_weights(std::mt19937_64& rng, std::size_t n,
                                        std::span<const std::size_t> support, double floor) {
  if (support.empty()) throw EmptyFacet("weight support is empty");
  const double free = 1.0 - floor * static_cast<double>(support.size());
  if (free < 0.0) throw BadParameter("floor too large for the support size");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> draws(support.size());
  double total = 0;
  for (auto& d : draws) total += (d = expo(rng));
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= n) throw BadParameter("support index out of range");
    w[support[i]] = floor + free * draws[i] / total;
  }
  return w;
}

}  // namespace trisep
