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

// trisep: command-line front end.
//
//   trisep verify-all --u 1 [--seed 42] [--json-out report.json]
//   trisep construct  --triple WAB --u 1 (--weights w1 ... w10 | --p P --q Q --r R)
//   trisep decompose  --input state.json --triple WAB --u 1
//   trisep extend     --triple WAB --u 1 --w1 w1 ... w10 [--w0 ...] [--t-max 64]
//
// Exit codes: 0 ok, 1 a check failed, 2 bad arguments or malformed input,
// 3 input data that is not a usable state.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trisep/errors.hpp"
#include "trisep/faces.hpp"
#include "trisep/json_io.hpp"
#include "trisep/pptlab.hpp"
#include "trisep/products.hpp"
#include "trisep/verify.hpp"
#include "trisep/xstate.hpp"

namespace {

using namespace trisep;
using json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitBadData = 3;

struct Options {
  double u = 1.0;
  std::uint64_t seed = 42;
  std::string triple = "WAB";
  std::optional<double> tol;
  std::string json_out;
  std::string input;
  std::vector<double> weights;
  std::vector<double> w0;
  std::vector<double> w1;
  std::optional<double> p, q, r;
  double t_max = 64.0;
};

void emit(const json& doc, const Options& opt) {
  const std::string text = doc.dump(2);
  std::cout << text << "\n";
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out);
    if (!out) throw BadParameter("cannot write " + opt.json_out);
    out << text << "\n";
  }
}

void require_u(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw BadParameter("--u must be a positive real");
}

// Ten nonnegative reals summing to one.
void check_weights(const std::vector<double>& w, const char* flag) {
  if (w.size() != 10) throw BadParameter(std::string(flag) + " takes exactly 10 weights");
  double total = 0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw BadParameter(std::string(flag) + " weights must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) throw BadParameter(std::string(flag) + " weights must sum to 1");
}

int run_verify_all(const Options& opt) {
  const Report report = verify_all(opt.u, opt.seed);
  emit(json_io::report_to_json(report), opt);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int run_construct(const Options& opt) {
  require_u(opt.u);
  const Triple t = parse_triple(opt.triple);
  const bool by_point = opt.p || opt.q || opt.r;
  if (by_point == !opt.weights.empty())
    throw BadParameter("give either --weights or all of --p --q --r");

  json doc;
  if (by_point) {
    if (!(opt.p && opt.q && opt.r)) throw BadParameter("--p, --q and --r go together");
    const TripleP point{*opt.p, *opt.q, *opt.r};
    point.validate();
    if (!surface_membership(point, Surface::S, opt.u, 1e-9))
      throw BadParameter("point is not on S: need p / (q r) = u");
    const XState x = rho_p(point, opt.u);
    doc = json_io::matrix_to_json(to_dense(x));
    doc["x"] = json_io::xstate_to_json(x);
    doc["p"] = {point.p, point.q, point.r};
  } else {
    check_weights(opt.weights, "--weights");
    const auto basis = TenStateBasis::make(t, opt.u);
    doc = json_io::matrix_to_json(basis.combine(opt.weights));
    doc["weights"] = opt.weights;
  }
  doc["triple"] = triple_name(t);
  doc["u"] = opt.u;
  emit(doc, opt);
  return kExitOk;
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  return json_io::matrix_from_json(doc);
}

int run_decompose(const Options& opt) {
  require_u(opt.u);
  const Triple t = parse_triple(opt.triple);
  ComplexMatrix rho = read_matrix(opt.input);
  if (rho.rows() != 8) throw MalformedInput("expected an 8x8 matrix");
  Tolerances tol;
  if (opt.tol) tol.tol_sym = *opt.tol;
  if (!rho.is_hermitian(tol.tol_sym)) throw NotAState("input matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw NotAState("input matrix has nonpositive trace");
  rho = rho * cplx{1.0 / tr};

  const auto basis = TenStateBasis::make(t, opt.u);
  json doc = json_io::certificate_to_json(decompose(rho, basis, tol));
  doc["input_trace"] = tr;
  doc["triple"] = triple_name(t);
  doc["u"] = opt.u;
  emit(doc, opt);
  return kExitOk;
}

int run_extend(const Options& opt) {
  require_u(opt.u);
  const Triple t = parse_triple(opt.triple);
  const std::vector<double> w0 = opt.w0.empty() ? std::vector<double>(10, 0.1) : opt.w0;
  check_weights(w0, "--w0");
  check_weights(opt.w1, "--w1");
  Tolerances tol = segment_tolerances();
  if (opt.tol) tol.tol_psd = *opt.tol;

  const auto basis = TenStateBasis::make(t, opt.u);
  const auto seg = extend_segment(basis.combine(w0), basis.combine(opt.w1), basis, opt.t_max, 1e-8, tol);
  json doc = json_io::segment_to_json(seg);
  doc["triple"] = triple_name(t);
  doc["u"] = opt.u;
  doc["w0"] = w0;
  doc["w1"] = opt.w1;
  emit(doc, opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witness-triple faces of three-qubit separable states"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--u", opt.u, "Witness parameter u > 0")->required();
    sub->add_option("--json-out", opt.json_out, "Also write the JSON result to this file");
  };
  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("--triple", opt.triple, "Witness triple: WAB, WBC, WCA or ABC")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify-all", "Run every certification check at u");
  add_common(verify);
  verify->add_option("--seed", opt.seed, "Seed for the randomized checks")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Emit a face state as matrix JSON");
  add_common(construct);
  add_triple(construct);
  construct->add_option("--weights", opt.weights, "Ten convex weights on the face basis");
  construct->add_option("--p", opt.p, "Point on S (with --q, --r)");
  construct->add_option("--q", opt.q);
  construct->add_option("--r", opt.r);

  auto* decomp = app.add_subcommand("decompose", "Expand a matrix in the face basis");
  add_common(decomp);
  add_triple(decomp);
  decomp->add_option("--input", opt.input, "Matrix JSON file")->required();
  decomp->add_option("--tol", opt.tol, "Hermiticity tolerance for the input");

  auto* extend = app.add_subcommand("extend", "Walk a segment past the face and bisect for the PPT boundary");
  add_common(extend);
  add_triple(extend);
  extend->add_option("--w0", opt.w0, "Weights of the interior start (default uniform)");
  extend->add_option("--w1", opt.w1, "Weights of the second endpoint")->required();
  extend->add_option("--t-max", opt.t_max, "Cap for the upper bracket")->capture_default_str();
  extend->add_option("--tol", opt.tol, "PSD tolerance used by the bisection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*verify) return run_verify_all(opt);
    if (*construct) return run_construct(opt);
    if (*decomp) return run_decompose(opt);
    if (*extend) return run_extend(opt);
  } catch (const NotAState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadData;
  } catch (const NotXShaped& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadData;
  } catch (const NotHermitian& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadData;
  } catch (const BadEndpoints& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
