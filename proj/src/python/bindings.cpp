// Copyright 2026 The jonesnmr Authors
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

#include <sstream>
#include <utility>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jonesnmr/ajl.hpp"
#include "jonesnmr/braid.hpp"
#include "jonesnmr/jones.hpp"
#include "jonesnmr/nmr.hpp"
#include "jonesnmr/pulse.hpp"
#include "jonesnmr/sweep.hpp"
#include "jonesnmr/tl_rep.hpp"

namespace py = pybind11;
using namespace jonesnmr;

namespace {

std::vector<std::pair<int, int>> letters_of(const BraidWord& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : w.letters()) out.emplace_back(g.index, g.sign);
  return out;
}

py::dict record_to_dict(const sweep::SweepRecord& r) {
  py::dict d;
  d["theta_deg"] = r.theta_deg;
  d["theta_rad"] = r.theta_rad;
  d["A"] = r.A;
  d["delta"] = r.delta;
  d["trace_exact"] = r.trace_exact;
  d["trace_nmr"] = r.trace_nmr;
  d["bracket"] = r.bracket;
  d["bracket_oracle"] = r.bracket_oracle ? py::cast(*r.bracket_oracle) : py::none();
  d["f"] = r.f;
  d["t"] = r.t;
  d["jones"] = r.jones;
  d["eq9_bound"] = r.eq9_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Jones polynomial of closed 3-braids and EVQC trace estimation";

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init([](int strands, const std::vector<std::pair<int, int>>& letters) {
             std::vector<BraidGenerator> gens;
             for (auto [i, s] : letters) gens.emplace_back(i, s);
             return BraidWord(strands, std::move(gens));
           }),
           py::arg("strands"), py::arg("letters") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &letters_of)
      .def("__len__", &BraidWord::size)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__str__", &render)
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord(" + std::to_string(w.strands()) + ", '" + render(w) + "')";
      });

  m.def("parse_braid", &parse_braid, py::arg("text"), py::arg("strands") = 3);
  m.def("render", &render);
  m.def("exponent_sum", &exponent_sum);
  m.def("invert", &invert);
  m.def("preset", [](const std::string& name) { return sweep::preset(name); });

  m.def("delta_from_theta", &delta_from_theta);
  m.def("is_admissible", &is_admissible);
  m.def("build_u", [](double theta) { return build_u(ReprParams::from_theta(theta)); },
        "(U1, U2) at an admissible angle");
  m.def("rho_word", [](const BraidWord& w, double theta) {
    return rho_word(w, ReprParams::from_theta(theta));
  });

  m.def(
      "evaluate",
      [](const BraidWord& w, double theta) {
        const InvariantValues v = evaluate(w, ReprParams::from_theta(theta));
        py::dict d;
        d["trace"] = v.trace;
        d["bracket"] = v.bracket;
        d["f"] = v.f;
        d["t"] = v.t;
        d["jones"] = v.jones;
        return d;
      },
      py::arg("word"), py::arg("theta"));
  m.def("bracket_state_sum",
        [](const BraidWord& w, Complex A) { return bracket_state_sum(w, A); },
        py::arg("word"), py::arg("A"));

  m.def("kl_correspondence_check", &ajl::kl_correspondence_check, py::arg("ajl_theta"));

  m.def(
      "estimate_trace",
      [](const ComplexMatrix& u, double epsilon, double alpha1, std::uint64_t seed) {
        return nmr::estimate_trace(u, nmr::EvqcPrecision{epsilon, alpha1, seed});
      },
      py::arg("U"), py::arg("epsilon") = 0.0, py::arg("alpha1") = 1.0, py::arg("seed") = 0);
  m.def("trace_error_bound", [](int work_qubits, double epsilon, double alpha1) {
    return nmr::trace_error_bound(work_qubits, nmr::EvqcPrecision{epsilon, alpha1, 0});
  });

  m.def(
      "pulse_angles",
      [](double theta, int which) {
        const auto a = pulse::pulse_angles(theta, which);
        return py::make_tuple(a.alpha, a.beta, a.gamma);
      },
      py::arg("theta"), py::arg("which"));
  m.def(
      "compile_controlled_s",
      [](int which, double theta, bool inverse) {
        const auto program = pulse::compile_controlled_s(which, theta, inverse);
        const double fidelity =
            pulse::verify_program(program, pulse::controlled_target(program.target));
        return py::make_tuple(pulse::print_program(program), fidelity);
      },
      py::arg("which"), py::arg("theta"), py::arg("inverse") = false,
      "Returns (program text, fidelity against 1 (+) s_which)");
  m.def("simulate_program", [](const std::string& text) {
    return pulse::simulate_program(pulse::parse_program(text));
  });

  m.def(
      "run_sweep",
      [](const BraidWord& w, std::vector<double> grid_deg, double epsilon, double alpha1,
         std::uint64_t seed, bool oracle) {
        if (grid_deg.empty()) grid_deg = sweep::default_grid_degrees();
        std::vector<sweep::SweepRecord> records;
        {
          py::gil_scoped_release release;
          records = sweep::run_sweep(w, grid_deg, nmr::EvqcPrecision{epsilon, alpha1, seed}, oracle);
        }
        py::list out;
        for (const auto& r : records) out.append(record_to_dict(r));
        return out;
      },
      py::arg("word"), py::arg("grid_deg") = std::vector<double>{}, py::arg("epsilon") = 0.0,
      py::arg("alpha1") = 1.0, py::arg("seed") = 0, py::arg("oracle") = false);
  m.def(
      "sweep_csv",
      [](const BraidWord& w, std::vector<double> grid_deg, double epsilon, double alpha1,
         std::uint64_t seed, bool oracle) {
        if (grid_deg.empty()) grid_deg = sweep::default_grid_degrees();
        std::ostringstream out;
        sweep::emit_csv(
            sweep::run_sweep(w, grid_deg, nmr::EvqcPrecision{epsilon, alpha1, seed}, oracle), out);
        return out.str();
      },
      py::arg("word"), py::arg("grid_deg") = std::vector<double>{}, py::arg("epsilon") = 0.0,
      py::arg("alpha1") = 1.0, py::arg("seed") = 0, py::arg("oracle") = false);
}
