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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trisep/errors.hpp"
#include "trisep/faces.hpp"
#include "trisep/json_io.hpp"
#include "trisep/pptlab.hpp"
#include "trisep/verify.hpp"
#include "trisep/witness.hpp"
#include "trisep/xstate.hpp"

namespace py = pybind11;
using namespace trisep;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = m(i, j);
  return out;
}

CArray to_numpy(const ComplexVector& x) {
  CArray out(x.size());
  std::copy(x.begin(), x.end(), out.mutable_data());
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2) throw BadDimension("expected a 2-d array");
  ComplexMatrix m(a.shape(0), a.shape(1));
  auto v = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = v(i, j);
  return m;
}

Party parse_party(const std::string& s) {
  if (s == "A") return Party::A;
  if (s == "B") return Party::B;
  if (s == "C") return Party::C;
  throw BadParameter("party must be A, B or C");
}

WitnessLabel parse_label(const std::string& s) {
  // Accepts "W_A" and the shorter "WA".
  for (WitnessLabel l : {WitnessLabel::W, WitnessLabel::WA, WitnessLabel::WB, WitnessLabel::WC}) {
    std::string name = witness_name(l);
    if (name == s) return l;
    std::erase(name, '_');
    if (name == s) return l;
  }
  throw BadParameter("witness label must be W, W_A, W_B or W_C");
}

py::dict certificate_dict(const DecompositionCertificate& c) {
  py::dict d;
  d["weights"] = c.weights;
  d["residual"] = c.residual;
  d["hyperplane_values"] = c.hyperplane_values;
  d["verdict"] = verdict_name(c.verdict);
  return d;
}

}  // namespace

PYBIND11_MODULE(_trisep, m) {
  m.doc() = "Witness-triple faces of three-qubit separable states";
  m.attr("__version__") = kVersion;

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<BadParameter>(m, "BadParameter", base);
  py::register_exception<BadDimension>(m, "BadDimension", base);
  py::register_exception<NotHermitian>(m, "NotHermitian", base);
  py::register_exception<NotXShaped>(m, "NotXShaped", base);
  py::register_exception<NonRealPairing>(m, "NonRealPairing", base);
  py::register_exception<ZeroVector>(m, "ZeroVector", base);
  py::register_exception<BadTriple>(m, "BadTriple", base);
  py::register_exception<SingularGram>(m, "SingularGram", base);
  py::register_exception<NotAState>(m, "NotAState", base);
  py::register_exception<BadEndpoints>(m, "BadEndpoints", base);
  py::register_exception<EmptyFacet>(m, "EmptyFacet", base);
  py::register_exception<MalformedInput>(m, "MalformedInput", base);

  py::class_<XState>(m, "XState")
      .def(py::init<>())
      .def(py::init([](std::array<double, 4> a, std::array<double, 4> b, std::array<cplx, 4> c) {
             return XState{a, b, c};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_readwrite("a", &XState::a)
      .def_readwrite("b", &XState::b)
      .def_readwrite("c", &XState::c)
      .def("dense", [](const XState& x) { return to_numpy(to_dense(x)); })
      .def("partial_transpose", [](const XState& x, const std::string& p) {
        return partial_transpose_x(x, parse_party(p));
      })
      .def("trace", [](const XState& x) { return trace(x); })
      .def("__eq__", [](const XState& a, const XState& b) { return a == b; })
      .def("__repr__", [](const XState& x) { return json_io::xstate_to_json(x).dump(); });

  m.def("x_from_dense", [](const CArray& a) { return from_dense(from_numpy(a)); }, py::arg("rho"));

  m.def("choi", [](double u) { return to_numpy(choi(BilinearMapPhi::from_u(u))); }, py::arg("u"),
        "Choi matrix of the bilinear map at parameter u.");
  m.def("witness", [](const std::string& label, double u) {
        return to_numpy(make_witness(parse_label(label), u).dense());
      }, py::arg("label"), py::arg("u"));
  m.def("witness_sum", [](const std::string& t, double u) { return to_numpy(witness_sum(parse_triple(t), u)); },
        py::arg("triple"), py::arg("u"));
  m.def("pairing", [](const CArray& w, const CArray& rho) { return pairing(from_numpy(w), from_numpy(rho)); },
        py::arg("w"), py::arg("rho"));
  m.def("partial_transpose", [](const CArray& rho, const std::string& p) {
        return to_numpy(partial_transpose(from_numpy(rho), parse_party(p)));
      }, py::arg("rho"), py::arg("party"));

  m.def("eta", [](double p, double q, double r, std::size_t j) { return to_numpy(eta(TripleP{p, q, r}, j).tensor()); },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("j"), "eta_{j+1}(p, q, r) as an 8-vector.");
  m.def("kill_set", [](const std::string& t, double u) {
        std::vector<CArray> out;
        for (const auto& v : triple_kill_set(parse_triple(t), u)) out.push_back(to_numpy(v.tensor()));
        return out;
      }, py::arg("triple"), py::arg("u"));
  m.def("triple_point", [](const std::string& t, double u) {
        const TripleP p = triple_point(parse_triple(t), u);
        return std::array<double, 3>{p.p, p.q, p.r};
      }, py::arg("triple"), py::arg("u"));
  m.def("rho_p", [](double p, double q, double r, double u) { return rho_p(TripleP{p, q, r}, u); },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("u"));
  m.def("coefficient_matrix", [](double u, std::optional<std::string> party) {
        std::optional<Party> conj;
        if (party) conj = parse_party(*party);
        return to_numpy(coefficient_matrix(u, conj));
      }, py::arg("u"), py::arg("conjugation") = py::none());

  m.def("face_states", [](const std::string& t, double u) {
        std::vector<CArray> out;
        for (const auto& s : TenStateBasis::make(parse_triple(t), u).states) out.push_back(to_numpy(s));
        return out;
      }, py::arg("triple"), py::arg("u"), "The ten unit-trace product states of the face.");
  m.def("construct", [](const std::string& t, double u, const std::vector<double>& w) {
        return to_numpy(TenStateBasis::make(parse_triple(t), u).combine(w));
      }, py::arg("triple"), py::arg("u"), py::arg("weights"));
  m.def("decompose", [](const CArray& rho, const std::string& t, double u) {
        return certificate_dict(decompose(from_numpy(rho), TenStateBasis::make(parse_triple(t), u)));
      }, py::arg("rho"), py::arg("triple"), py::arg("u"));
  m.def("is_ppt", [](const CArray& rho) { return is_ppt(from_numpy(rho)); }, py::arg("rho"));
  m.def("extend_segment", [](const std::vector<double>& w0, const std::vector<double>& w1,
                             const std::string& t, double u, double t_cap) {
        const auto basis = TenStateBasis::make(parse_triple(t), u);
        const auto seg = extend_segment(basis.combine(w0), basis.combine(w1), basis, t_cap);
        py::list probes;
        for (const auto& p : seg.probes) {
          py::dict d;
          d["t"] = p.t;
          d["ppt"] = p.ppt;
          d["certificate"] = certificate_dict(p.certificate);
          probes.append(d);
        }
        py::dict out;
        out["t_star"] = seg.t_star;
        out["t_max"] = seg.t_max;
        out["probes"] = probes;
        out["witness_values"] = seg.witness_values;
        return out;
      }, py::arg("w0"), py::arg("w1"), py::arg("triple"), py::arg("u"), py::arg("t_cap") = 64.0);

  m.def("verify_all_json", [](double u, std::uint64_t seed) {
        return json_io::report_to_json(verify_all(u, seed)).dump();
      }, py::arg("u"), py::arg("seed") = 42);
}
