// Copyright 2026 The bellmax Authors
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

#include <string>
#include <vector>

#include "bellmax/bell_operators.h"
#include "bellmax/chsh.h"
#include "bellmax/errors.h"
#include "bellmax/mabk.h"
#include "bellmax/mermin.h"
#include "bellmax/paired_spectrum.h"
#include "bellmax/qstate.h"
#include "bellmax/spin_chain.h"
#include "bellmax/survey.h"
#include "bellmax/violation_optimizer.h"

namespace py = pybind11;

namespace bellmax {
namespace {

BellFamily family_by_name(const std::string& name) {
  if (name == "chsh") return chsh_family();
  if (name == "mermin") return mermin_family();
  if (name == "mabk4") return mabk4_family();
  fail(ErrorCode::kParseError,
       "unknown family '" + name + "' (chsh, mermin, mabk4)");
}

PairedSpectrum paired(const std::vector<double>& values, int parties,
                      bool sort) {
  return sort ? PairedSpectrum::canonical(values, parties)
              : PairedSpectrum::from_pairs(values, parties);
}

py::dict mixedness_dict(const ComplexMatrix& m) {
  const MixednessScalars s = mixedness(make_density(m));
  py::dict d;
  d["participation_ratio"] = s.participation_ratio;
  d["max_eigenvalue"] = s.max_eigenvalue;
  d["purity"] = s.purity;
  return d;
}

py::dict optimize(const ComplexMatrix& m, const std::string& family,
                  int starts, std::uint64_t seed, int workers) {
  OptimizerOptions options;
  options.starts = starts;
  options.seed = seed;
  options.workers = workers;
  const OptimizationReport r =
      maximize_violation(make_density(m), family_by_name(family), options);
  py::dict d;
  d["value"] = r.value;
  d["starts"] = r.starts;
  d["best_start"] = r.best_start;
  d["converged_fraction"] = r.converged_fraction;
  d["angles"] = r.settings.angles();
  return d;
}

py::dict classify_dict(const std::vector<double>& values, bool sort) {
  const DistillabilityReport r = classify(paired(values, 3, sort));
  py::dict d;
  d["ppt"] = std::vector<bool>(r.ppt.begin(), r.ppt.end());
  d["distillable"] = r.distillable;
  d["mermin_value"] = r.mermin_value;
  d["category"] = category_name(r.category);
  return d;
}

py::dict survey_dict(std::int64_t samples, std::uint64_t seed, int bins,
                     int workers, bool cross_check_ppt) {
  SurveyOptions options;
  options.samples = samples;
  options.seed = seed;
  options.bins = bins;
  options.workers = workers;
  options.cross_check_ppt = cross_check_ppt;
  SurveyStats stats;
  {
    py::gil_scoped_release release;
    stats = survey(options);
  }
  py::dict probs;
  py::dict counts;
  for (int c = 0; c < 4; ++c) {
    const std::string name =
        category_name(static_cast<DistillabilityCategory>(c));
    probs[py::str(name)] = stats.category_probs[c];
    counts[py::str(name)] = stats.counts[c];
  }
  py::dict d;
  d["samples"] = stats.n_samples;
  d["seed"] = stats.seed;
  d["probabilities"] = probs;
  d["counts"] = counts;
  d["bin_width"] = stats.bin_width;
  d["density"] = stats.density;
  d["ppt_checked"] = stats.ppt_checked;
  d["ppt_mismatches"] = stats.ppt_mismatches;
  return d;
}

}  // namespace
}  // namespace bellmax

PYBIND11_MODULE(_core, m) {
  using namespace bellmax;
  m.doc() = "Maximal Bell violations of qubit states";

  static py::handle error_type =
      py::exception<Error>(m, "BellmaxError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = error_code_name(e.code());
      exc.attr("exit_status") = exit_status(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  // States come back as complex numpy arrays in the computational basis.
  m.def("validate_density",
        [](const ComplexMatrix& rho) { return make_density(rho).matrix(); },
        py::arg("rho"));
  m.def("mixedness", &mixedness_dict, py::arg("rho"));
  m.def("concurrence",
        [](const ComplexMatrix& rho) { return concurrence(make_density(rho)); },
        py::arg("rho"));
  m.def("partial_transpose",
        [](const ComplexMatrix& rho, int party) {
          return partial_transpose(make_density(rho), party);
        },
        py::arg("rho"), py::arg("party"));

  m.def("maximize_violation", &optimize, py::arg("rho"), py::arg("family"),
        py::arg("starts") = 0, py::arg("seed") = 0xB311, py::arg("workers") = 1);
  m.def("bell_expectation",
        [](const ComplexMatrix& rho, const std::string& family,
           const std::vector<double>& angles) {
          return expectation(make_density(rho),
                             bell_operator(family_by_name(family),
                                           ObserverSettings::from_angles(angles)));
        },
        py::arg("rho"), py::arg("family"), py::arg("angles"));

  m.def("chsh_max_bell_diagonal",
        [](const std::vector<double>& lambdas) {
          return chsh_max_bell_diagonal(BellDiagonalSpectrum::from_span(lambdas));
        },
        py::arg("lambdas"));
  m.def("chsh_frontier_R",
        [](double r) { return chsh_frontier_R(r).b_max; }, py::arg("R"));
  m.def("chsh_frontier_lambda", &chsh_frontier_lambda, py::arg("lambda_max"));
  m.def("mems_state", [](double x) { return mems_state(x).matrix(); },
        py::arg("x"));
  m.def("chsh_max_mems", &chsh_max_mems, py::arg("x"));
  m.def("mnms_state",
        [](double x, const std::string& region) {
          if (region != "I" && region != "II") {
            fail(ErrorCode::kParseError, "region must be I or II");
          }
          return mnms_state(x, region == "I" ? MnmsRegion::kI : MnmsRegion::kII)
              .matrix();
        },
        py::arg("x"), py::arg("region") = "I");
  m.def("werner2", [](double p) { return werner2(p).matrix(); }, py::arg("p"));

  m.def("mermin_bound_diagonal",
        [](const std::vector<double>& values, bool sort) {
          return mermin_bound_diagonal(paired(values, 3, sort));
        },
        py::arg("spectrum"), py::arg("sort") = true);
  m.def("solve_mermin_angles",
        [](const std::vector<double>& values, bool sort) {
          const MerminAngles a = solve_mermin_angles(paired(values, 3, sort));
          py::dict d;
          d["value"] = a.value;
          d["phi"] = a.phi;
          d["psi"] = a.psi;
          d["ansatz_value"] = a.ansatz_value;
          d["phases"] = a.phases;
          return d;
        },
        py::arg("spectrum"), py::arg("sort") = true);
  m.def("classify", &classify_dict, py::arg("spectrum"), py::arg("sort") = true);
  m.def("werner3", [](double x) { return werner3(x).matrix(); }, py::arg("x"));
  m.def("mermin_frontier_R", &mermin_frontier_R, py::arg("R"));

  m.def("mabk_bound_diagonal",
        [](const std::vector<double>& values, bool sort) {
          return mabk_bound_diagonal(paired(values, 4, sort));
        },
        py::arg("spectrum"), py::arg("sort") = true);
  m.def("mabk_conjecture_bound",
        [](const std::vector<double>& values, int parties, bool sort) {
          return mabk_conjecture_bound(paired(values, parties, sort));
        },
        py::arg("spectrum"), py::arg("parties"), py::arg("sort") = true);
  m.def("ghz_violation_threshold", &ghz_violation_threshold, py::arg("n"));
  m.def("ghz_violation_leading",
        [](int n, double p) { return ghz_violation_leading(GeneralizedGhz(n, p)); },
        py::arg("n"), py::arg("p"));

  m.def("chsh_max_from_correlators",
        [](double t_xx, double t_yy, double t_zz, double t_xy) {
          return chsh_max_from_correlators({t_xx, t_yy, t_zz, t_xy});
        },
        py::arg("t_xx"), py::arg("t_yy"), py::arg("t_zz"), py::arg("t_xy") = 0.0);
  m.def("mermin_bound_from_correlators",
        [](double t_zzz, double t_zxx, double t_xzx, double t_xxz) {
          return mermin_bound_from_correlators(
              {t_zzz, t_zxx, t_xzx, t_xxz, std::nullopt});
        },
        py::arg("t_zzz"), py::arg("t_zxx"), py::arg("t_xzx"), py::arg("t_xxz"));

  m.def("survey", &survey_dict, py::arg("samples") = 1000000,
        py::arg("seed") = 0xB311, py::arg("bins") = 100, py::arg("workers") = 1,
        py::arg("cross_check_ppt") = false);
}
