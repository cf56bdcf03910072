// Copyright 2026 The holevo-gauss Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holevo/closed_form.hpp"
#include "holevo/fisher_bounds.hpp"
#include "holevo/holevo_sdp.hpp"
#include "holevo/montecarlo.hpp"
#include "holevo/optimal_measurement.hpp"
#include "holevo/probe_io.hpp"

namespace py = pybind11;
using namespace holevo;

namespace {

py::dict bound_dict(const ProbeModel& model, double tol) {
  const EuclideanFrame frame = orthonormal_frame(model);
  const BoundResult b = holevo_bound(frame, tol);
  const FisherResult f = fisher_bounds(frame);
  const MeasurementPlan plan = extract_plan(model, frame, b.f_opt);
  py::dict out;
  out["sigma_star"] = b.sigma_star;
  out["f_opt"] = b.f_opt;
  out["f_reduced"] = b.f_reduced;
  out["gap"] = b.solution.gap;
  out["iterations"] = b.solution.iterations;
  out["optimal"] = b.report.optimal;
  out["sld"] = f.c_sld;
  out["rld"] = f.c_rld;
  out["z"] = plan.z;
  out["achieved_mse"] = plan.achieved_mse();
  if (plan.circuit) {
    out["circuit"] = std::string(circuit_name(plan.circuit->type));
    out["t"] = plan.circuit->t;
  } else {
    out["circuit"] = py::none();
    out["t"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Holevo Cramer-Rao bounds for Gaussian displacement estimation";

  // Library errors surface as ValueError (bad input) or RuntimeError.
  // Translators run newest first, so the base class goes in before its children.
  py::register_exception<Error>(m, "HolevoError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);
  py::register_exception<UnidentifiableParameterError>(m, "UnidentifiableParameterError",
                                                       PyExc_ValueError);

  py::class_<ProbeModel>(m, "ProbeModel")
      .def(py::init(&ProbeModel::create), py::arg("covariance"), py::arg("mean_coeffs"))
      .def_property_readonly("n_modes", &ProbeModel::n_modes)
      .def_property_readonly("n_params", &ProbeModel::n_params)
      .def_property_readonly("covariance", &ProbeModel::covariance)
      .def_property_readonly("mean_coeffs", &ProbeModel::mean_coeffs)
      .def("to_json", &probe_to_json);

  m.def("symmetric_tmst_probe", &symmetric_tmst_probe, py::arg("v"), py::arg("r"));
  m.def("parse_probe", &parse_probe, py::arg("text"));
  m.def("load_probe", &load_probe, py::arg("path"));

  m.def("holevo_bound", &bound_dict, py::arg("model"),
        py::arg("tol") = kDefaultSolverTolerance,
        "Solve the SDP; returns the bound, optimizer, Fisher bounds and plan.");
  m.def("holevo_bound_closed", &holevo_bound_closed, py::arg("v"), py::arg("r"));
  m.def("heterodyne_transmission", &heterodyne_transmission, py::arg("v"), py::arg("r"));
  m.def("c0_upper", &c0_upper, py::arg("v"), py::arg("r"));
  m.def("entanglement_threshold", &entanglement_threshold, py::arg("v"));
  m.def("is_entangled", &is_entangled, py::arg("v"), py::arg("r"));
  m.def("realify", &realify, py::arg("hermitian"));
  m.def("trabs", py::overload_cast<const MatrixXcd&>(&trabs), py::arg("m"));

  m.def(
      "verify_closed_form",
      [](double v, double r, double c0, double tol) {
        const Certificate c = certificate_closed(v, r, c0);
        const CertificateReport rep =
            verify_certificate(build_sdp(closed_form_frame(v, r)), c.x, c.y, tol);
        py::dict out;
        out["optimal"] = rep.optimal;
        out["gap"] = rep.gap;
        out["primal_value"] = rep.primal_value;
        out["dual_value"] = rep.dual_value;
        out["max_constraint_residual"] = rep.max_constraint_residual;
        out["min_eig_x"] = rep.min_eig_x;
        out["min_eig_slack"] = rep.min_eig_slack;
        return out;
      },
      py::arg("v"), py::arg("r"), py::arg("c0") = 0.0,
      py::arg("tol") = kDefaultSolverTolerance);

  m.def(
      "simulate",
      [](const std::string& scheme, double v, double r, double t,
         std::array<double, 2> theta, std::int64_t shots, std::uint64_t seed) {
        CircuitSpec spec;
        if (scheme == "double_homodyne") {
          spec.scheme = CircuitType::kDoubleHomodyne;
        } else if (scheme == "double_unbalanced_heterodyne") {
          spec.scheme = CircuitType::kDoubleUnbalancedHeterodyne;
        } else {
          throw InputError("unknown scheme " + scheme);
        }
        spec.v = v;
        spec.r = r;
        spec.t = t;
        spec.theta = theta;
        spec.shots = shots;
        spec.seed = seed;
        SimulationResult res;
        {
          py::gil_scoped_release release;
          res = simulate(spec);
        }
        py::dict out;
        out["empirical_mean"] = res.empirical_mean;
        out["empirical_mse_sum"] = res.empirical_mse_sum;
        out["standard_error"] = res.standard_error;
        out["expected_mse"] = res.expected_mse;
        out["shots"] = res.shots_used;
        return out;
      },
      py::arg("scheme"), py::arg("v"), py::arg("r"), py::arg("t") = 1.0,
      py::arg("theta") = std::array<double, 2>{0.0, 0.0}, py::arg("shots") = 100000,
      py::arg("seed") = 0);
}
