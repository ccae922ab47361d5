// Copyright 2026 The mzduality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mzd/duality_harness.hpp"
#include "mzd/errors.hpp"
#include "mzd/interferometer.hpp"
#include "mzd/io.hpp"
#include "mzd/operator_core.hpp"
#include "mzd/unsharp_joint.hpp"
#include "mzd/which_path.hpp"

namespace py = pybind11;
using namespace mzd;

namespace {

InterferometerConfig make_config(double r, double phi, const ComplexMatrix& particle,
                                 const ComplexMatrix& detector, const ComplexMatrix& unitary,
                                 const std::string& port) {
  if (port != "A" && port != "B") throw DomainError("port must be 'A' or 'B'");
  InterferometerConfig c;
  c.r = r;
  c.phi = phi;
  c.particle_state = DensityOperator(particle);
  c.detector_state = DensityOperator(detector);
  c.detector_unitary = UnitaryOperator(unitary);
  if (port != "A" && port != "B") throw DomainError("port must be \"A\" or \"B\"");
  c.port = port == "A" ? Port::A : Port::B;
  c.validate();
  return c;
}

py::dict joint_dict(const JointObservable& j) {
  py::dict d;
  d["plus_plus"] = j.plus_plus();
  d["plus_minus"] = j.plus_minus();
  d["minus_plus"] = j.minus_plus();
  d["minus_minus"] = j.minus_minus();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Asymmetric Mach-Zehnder interferometer, unsharp observables and duality checks";

  static py::exception<Error> base_error(m, "MzdError", PyExc_ValueError);
  // Translators run newest first, so the specific types are registered last.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });
  py::register_exception<DegeneratePortError>(m, "DegeneratePortError", base_error.ptr());
  py::register_exception<UnsupportedRegimeError>(m, "UnsupportedRegimeError", base_error.ptr());
  py::register_exception<InvalidObservableError>(m, "InvalidObservableError", base_error.ptr());

  py::class_<InterferometerConfig>(m, "InterferometerConfig")
      .def(py::init(&make_config), py::arg("r"), py::arg("phi"), py::arg("particle_state"),
           py::arg("detector_state"), py::arg("detector_unitary"), py::arg("port") = "A")
      .def_readonly("r", &InterferometerConfig::r)
      .def_readonly("phi", &InterferometerConfig::phi)
      .def_property_readonly("port",
                             [](const InterferometerConfig& c) { return port_name(c.port); })
      .def_property_readonly("particle_state",
                             [](const InterferometerConfig& c) { return c.particle_state.matrix(); })
      .def_property_readonly("detector_state",
                             [](const InterferometerConfig& c) { return c.detector_state.matrix(); })
      .def_property_readonly(
          "detector_unitary",
          [](const InterferometerConfig& c) { return c.detector_unitary.matrix(); })
      .def_property_readonly("visibility_ratio", &InterferometerConfig::visibility_ratio)
      .def_property_readonly("delta", &InterferometerConfig::delta)
      .def("to_json", [](const InterferometerConfig& c) { return io::scenario_to_json(c).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return io::parse_scenario(io::json::parse(text));
      });

  m.def("beam_splitter_unitary", [](double r) { return beam_splitter_unitary(r).matrix(); });
  m.def("coupling_unitary", [](const InterferometerConfig& c) { return coupling_unitary(c).matrix(); });
  m.def("final_state", [](const InterferometerConfig& c) { return final_state(c).matrix(); });
  m.def("detection_probability", &detection_probability);
  m.def("detection_probability_closed_form", &detection_probability_closed_form);
  m.def("path_weights", [](const InterferometerConfig& c) {
    const PathWeights w = path_weights(c);
    return py::make_tuple(w.w1, w.w2, w.w3, w.w4);
  });
  m.def("predictability", &predictability);
  m.def("a_priori_visibility", &a_priori_visibility);
  m.def("fringe_visibility", &fringe_visibility);

  py::class_<Strategy>(m, "Strategy")
      .def(py::init<ComplexMatrix, std::vector<std::size_t>>(), py::arg("basis"),
           py::arg("subset"))
      .def_static("computational", &Strategy::computational, py::arg("dim"), py::arg("subset"))
      .def_property_readonly("basis", &Strategy::basis)
      .def_property_readonly("subset", &Strategy::subset);

  m.def("eta_values", [](const Strategy& s, const ComplexMatrix& rho_d, const ComplexMatrix& u) {
    const EtaPair e = eta_values(s, DensityOperator(rho_d), UnitaryOperator(u));
    return py::make_tuple(e.eta_s, e.eta_s_u);
  });
  m.def("guess_likelihood", [](double w1, double w2, double eta_s, double eta_s_u) {
    return guess_likelihood(w1, w2, {eta_s, eta_s_u});
  });
  m.def("distinguishability", [](double w1, double w2, double eta_s, double eta_s_u) {
    return distinguishability(w1, w2, {eta_s, eta_s_u});
  });
  m.def("gamma_term", [](double w1, double w2, double eta_s, double eta_s_u) {
    return gamma_term(w1, w2, {eta_s, eta_s_u});
  });
  m.def("helstrom_bound",
        [](const ComplexMatrix& rho_d, const ComplexMatrix& u, double w1, double w2) {
          return helstrom_bound(DensityOperator(rho_d), UnitaryOperator(u), w1, w2);
        });
  m.def(
      "optimize_strategy",
      [](const ComplexMatrix& rho_d, const ComplexMatrix& u, double w1, double w2,
         std::size_t budget, std::uint64_t seed) {
        OptimizedStrategy best =
            optimize_strategy(DensityOperator(rho_d), UnitaryOperator(u), w1, w2, budget, seed);
        return py::make_tuple(best.strategy, best.distinguishability);
      },
      py::arg("rho_d"), py::arg("u"), py::arg("w1"), py::arg("w2"), py::arg("search_budget") = 16,
      py::arg("seed") = 0);

  py::class_<UnsharpObservable>(m, "UnsharpObservable")
      .def(py::init<double, const BlochVector&>(), py::arg("bias"), py::arg("direction"))
      .def_property_readonly("bias", &UnsharpObservable::bias)
      .def_property_readonly("direction", &UnsharpObservable::direction)
      .def("effect_plus", &UnsharpObservable::effect_plus)
      .def("effect_minus", &UnsharpObservable::effect_minus);

  m.def("interference_observable", &interference_observable);
  m.def("guess_observable", [](const Strategy& s, const ComplexMatrix& rho_d, const ComplexMatrix& u) {
    return guess_observable(s, DensityOperator(rho_d), UnitaryOperator(u));
  });
  m.def("jm_closed_form", [](const UnsharpObservable& a, const UnsharpObservable& b) {
    const ClosedFormResult res = jm_closed_form(a, b);
    py::dict d;
    d["jointly_measurable"] = res.jointly_measurable;
    d["margin"] = res.margin;
    d["boundary"] = res.boundary;
    return d;
  });
  m.def("jm_oracle", [](const UnsharpObservable& a, const UnsharpObservable& b) {
    const OracleResult res = jm_oracle(a, b);
    py::dict d;
    d["jointly_measurable"] = res.jointly_measurable;
    d["best_min_eigenvalue"] = res.best_min_eigenvalue;
    d["witness"] = res.witness ? py::object(joint_dict(*res.witness)) : py::none();
    return d;
  });

  m.def(
      "run_suite",
      [](std::uint64_t seed, std::size_t n_trials, std::size_t dim_min, std::size_t dim_max,
         bool pure_states, bool optimal_strategy, std::size_t threads) {
        SuiteOptions o;
        o.master_seed = seed;
        o.n_trials = n_trials;
        o.dim_min = dim_min;
        o.dim_max = dim_max;
        o.pure_states = pure_states;
        o.optimal_strategy = optimal_strategy;
        o.threads = threads;
        DualityReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(o);
        }
        return io::report_summary(report).dump();
      },
      py::arg("seed"), py::arg("n_trials"), py::arg("dim_min") = 2, py::arg("dim_max") = 2,
      py::arg("pure_states") = false, py::arg("optimal_strategy") = false,
      py::arg("threads") = 1);
}
