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

#include "trisep/json_io.hpp"

#include "trisep/errors.hpp"

namespace trisep::json_io {

namespace {

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ri = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("matrix JSON must be an object");
  for (const char* key : {"dim", "re", "im"})
    if (!j.contains(key)) throw MalformedInput(std::string("matrix JSON is missing \"") + key + "\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw MalformedInput("\"dim\" must be a positive integer");
  const auto n = static_cast<std::size_t>(j["dim"].get<long long>());
  ComplexMatrix m(n);
  auto read = [&](const char* key, bool imag) {
    const json& rows = j[key];
    if (!rows.is_array() || rows.size() != n)
      throw MalformedInput(std::string("\"") + key + "\" must have dim rows");
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n)
        throw MalformedInput(std::string("\"") + key + "\" row " + std::to_string(r) + " has the wrong length");
      for (std::size_t c = 0; c < n; ++c) {
        if (!rows[r][c].is_number()) throw MalformedInput("matrix entries must be numbers");
        const double v = rows[r][c].get<double>();
        if (imag)
          m(r, c).imag(v);
        else
          m(r, c).real(v);
      }
    }
  };
  read("re", false);
  read("im", true);
  return m;
}

json xstate_to_json(const XState& x) {
  json c = json::array();
  for (const cplx& z : x.c) c.push_back(complex_pair(z));
  return {{"a", x.a}, {"b", x.b}, {"c", std::move(c)}};
}

json certificate_to_json(const DecompositionCertificate& cert) {
  return {{"weights", cert.weights},
          {"residual", cert.residual},
          {"hyperplane_values", cert.hyperplane_values},
          {"verdict", verdict_name(cert.verdict)}};
}

json segment_to_json(const SegmentResult& seg) {
  json probes = json::array();
  for (const auto& p : seg.probes)
    probes.push_back({{"t", p.t}, {"ppt", p.ppt}, {"certificate", certificate_to_json(p.certificate)}});
  json values = json::array();
  for (const auto& [t, v] : seg.witness_values) values.push_back({{"t", t}, {"pairing", v}});
  return {{"t_star", seg.t_star}, {"t_max", seg.t_max}, {"probes", std::move(probes)},
          {"witness_values", std::move(values)}};
}

json report_to_json(const Report& report) {
  json records = json::array();
  for (const auto& r : report.records)
    records.push_back({{"name", r.name},
                       {"status", r.passed ? "pass" : "fail"},
                       {"measured", r.measured},
                       {"tolerances", r.tolerances},
                       {"detail", r.detail}});
  json triples = json::array();
  for (Triple t : kTriples) triples.push_back(triple_name(t));
  return {{"version", report.version}, {"u", report.us},     {"seed", report.seed},
          {"triples", std::move(triples)}, {"records", std::move(records)},
          {"verdict", report.passed() ? "pass" : "fail"}};
}

}  // namespace trisep::json_io
