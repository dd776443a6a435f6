/* Copyright 2026 The latsec Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings for the lattice, Gaussian, rate and simulation layers.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "latsec/catalog.h"
#include "latsec/channel.h"
#include "latsec/errors.h"
#include "latsec/experiments.h"
#include "latsec/gaussian.h"
#include "latsec/lattice.h"
#include "latsec/parallel.h"
#include "latsec/rates.h"
#include "latsec/sampler.h"
#include "latsec/wiretap.h"

namespace py = pybind11;

namespace latsec {
namespace {

py::dict simulate_row_dict(const SimulateRow& r) {
  py::dict d;
  d["seed"] = r.seed;
  d["k"] = r.k;
  d["base"] = r.base;
  d["snr_b_db"] = r.snr_b_db;
  d["snr_e_db"] = r.snr_e_db;
  d["R"] = r.R;
  d["R_prime"] = r.R_prime;
  d["messages"] = r.messages;
  d["p_e_hat"] = r.p_e_hat;
  d["p_e_se"] = r.p_e_se;
  d["union_bound"] = r.union_bound;
  d["epsilon_k"] = r.epsilon_k;
  d["leakage_bound"] = r.leakage_bound;
  d["v_hat"] = r.v_hat;
  d["condition_met"] = r.condition_met;
  return d;
}

RateMode rate_mode_from(const std::string& s) {
  if (s == "siso-fading") return RateMode::kSisoFading;
  if (s == "gaussian") return RateMode::kGaussian;
  if (s == "mimo") return RateMode::kMimo;
  if (s == "compound") return RateMode::kCompound;
  throw InvalidSpec("unknown rate mode " + s);
}

}  // namespace
}  // namespace latsec

PYBIND11_MODULE(_latsec, m) {
  using namespace latsec;
  m.doc() = "Lattice wiretap coding: lattices, Gaussian measures and rates";

  auto error = py::register_exception<Error>(m, "LatsecError", PyExc_RuntimeError);
  py::register_exception<InvalidLattice>(m, "InvalidLattice", error.ptr());
  py::register_exception<InvalidSpec>(m, "InvalidSpec", error.ptr());
  py::register_exception<NotSmoothEnough>(m, "NotSmoothEnough", error.ptr());
  py::register_exception<UnknownReference>(m, "UnknownReference", error.ptr());
  py::register_exception<NestingError>(m, "NestingError", error.ptr());

  py::class_<Lattice>(m, "Lattice")
      .def(py::init<RealMatrix, std::string>(), py::arg("basis"),
           py::arg("provenance") = "explicit")
      .def_static("from_complex", &Lattice::from_complex, py::arg("basis"),
                  py::arg("provenance") = "explicit")
      .def_static("integer", &Lattice::integer, py::arg("k"))
      .def_property_readonly("dim_complex", &Lattice::dim_complex)
      .def_property_readonly("dim_real", &Lattice::dim_real)
      .def_property_readonly("basis", &Lattice::basis)
      .def_property_readonly("gram", &Lattice::gram)
      .def_property_readonly("volume", &Lattice::volume)
      .def_property_readonly("provenance", &Lattice::provenance)
      .def("point", &Lattice::point, py::arg("coeffs"))
      .def("scaled", &Lattice::scaled, py::arg("alpha"))
      .def("to_json", &lattice_to_json)
      .def_static("from_json", &lattice_from_json, py::arg("text"))
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice dim_complex=" + std::to_string(l.dim_complex()) +
               " provenance=" + l.provenance() + ">";
      });

  m.def("catalog_lattice", [](const std::string& ref) { return resolve_lattice(ref).lattice; },
        py::arg("ref"), "Lattice for a catalog reference such as \"qzeta5/dual\"");
  m.def("field_names", &field_names);
  m.def("catalog_manifest_json", &catalog_manifest_json);

  m.def("dual", &dual, py::arg("lattice"));
  m.def("min_distance", [](const Lattice& l) { return min_distance(l).lambda1; },
        py::arg("lattice"));
  m.def("hermite_invariant", &hermite_invariant, py::arg("lattice"));
  m.def("product_distance",
        [](const Lattice& l, double rf) {
          const ProductDistance p = product_distance(l, rf);
          return py::make_tuple(p.p, p.np);
        },
        py::arg("lattice"), py::arg("radius_factor") = 2.0,
        "(p, normalized product distance)");

  m.def("banaszczyk_constant", &banaszczyk_constant, py::arg("c"));
  m.def("flatness_factor",
        [](const Lattice& l, double sigma) {
          return flatness_factor(l, GaussianSpec::isotropic(sigma));
        },
        py::arg("lattice"), py::arg("sigma"));
  m.def("flatness_factor_correlated",
        [](const Lattice& l, const ComplexMatrix& cov) {
          return flatness_factor(l, GaussianSpec::correlated(cov));
        },
        py::arg("lattice"), py::arg("covariance"));
  m.def("smoothing_parameter", &smoothing_parameter, py::arg("lattice"), py::arg("eps"));

  m.def("sample_discrete_gaussian",
        [](const Lattice& l, double sigma, ComplexVector shift, int count, uint64_t seed) {
          const DiscreteGaussianSampler s(l, shift, GaussianSpec::isotropic(sigma));
          ComplexMatrix out(l.dim_complex(), count);
          {
            py::gil_scoped_release release;
            for (int t = 0; t < count; ++t) {
              Rng rng = make_rng(seed, 0, t);
              out.col(t) = s.sample(rng);
            }
          }
          return out;
        },
        py::arg("lattice"), py::arg("sigma"), py::arg("shift") = ComplexVector(),
        py::arg("count") = 1, py::arg("seed") = 0,
        "Samples of D_{lattice + shift, sigma} as columns");

  m.def("conway_thompson_gap", &conway_thompson_gap);
  m.def("rayleigh_capacity", &rayleigh_capacity, py::arg("snr"));
  m.def("nats_to_bits", &nats_to_bits, py::arg("nats"));
  m.def("db_to_linear", &db_to_linear, py::arg("db"));
  m.def("rate_constants",
        [](double rd, int n) {
          const RateConstants c = rate_constants(rd, n);
          py::dict d;
          d["kappa_siso"] = c.kappa_siso;
          d["kappa_mimo"] = c.kappa_mimo;
          d["beta"] = c.beta;
          return d;
        },
        py::arg("rd") = kMartinetRootDiscriminant, py::arg("n") = 1);
  m.def("achievable_rates",
        [](double c_b, double c_e, double g_b, double g_e, int n, const std::string& mode) {
          RateBudget b;
          b.c_b = c_b;
          b.c_e = c_e;
          b.g_b = g_b;
          b.g_e = g_e;
          b.n = n;
          const AchievableRates r = achievable_rates(b, rate_mode_from(mode));
          py::dict d;
          d["r_max"] = r.r_max;
          d["r_prime_min"] = r.r_prime_min;
          d["r_sum_max"] = r.r_sum_max;
          return d;
        },
        py::arg("c_b"), py::arg("c_e"), py::arg("g_b"), py::arg("g_e"), py::arg("n") = 1,
        py::arg("mode") = "siso-fading");

  m.def("lln_diagnostic",
        [](const std::string& law, double snr, std::vector<int> k_list, double delta,
           uint64_t trials, uint64_t seed) {
          FadingSpec spec;
          spec.law = parse_fading_law(law);
          spec.snr = snr;
          std::vector<LlnRow> rows;
          {
            py::gil_scoped_release release;
            rows = lln_diagnostic(spec, k_list, delta, trials, seed);
          }
          py::list out;
          for (const LlnRow& r : rows)
            out.append(py::make_tuple(r.k, r.p_hat, r.k_p_hat));
          return out;
        },
        py::arg("law"), py::arg("snr"), py::arg("k_list"), py::arg("delta") = 0.1,
        py::arg("trials") = 1000, py::arg("seed") = 0, "Rows of (k, p_hat, k * p_hat)");

  m.def("simulate",
        [](std::vector<int> k_list, double snr_b_db, double snr_e_db, double r,
           double r_prime, uint64_t trials, uint64_t leakage_trials, uint64_t seed,
           int threads) {
          SimulateParams p;
          p.k_list = std::move(k_list);
          p.snr_b_db = snr_b_db;
          p.snr_e_db = snr_e_db;
          p.R = r;
          p.R_prime = r_prime;
          p.trials = trials;
          p.leakage_trials = leakage_trials;
          p.seed = seed;
          p.threads = threads;
          std::vector<SimulateRow> rows;
          {
            py::gil_scoped_release release;
            rows = simulate(p);
          }
          py::list out;
          for (const SimulateRow& row : rows) out.append(simulate_row_dict(row));
          return out;
        },
        py::arg("k_list") = std::vector<int>{1, 2}, py::arg("snr_b_db") = 20.0,
        py::arg("snr_e_db") = 0.0, py::arg("R") = SimulateParams{}.R,
        py::arg("R_prime") = 4.0, py::arg("trials") = 10'000,
        py::arg("leakage_trials") = 0, py::arg("seed") = 1, py::arg("threads") = 0);

  m.def("set_default_threads", &set_default_threads, py::arg("threads"));
}
