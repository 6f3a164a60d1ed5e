// Copyright 2026 The cpwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpwall/dielectric.hpp"
#include "cpwall/errors.hpp"
#include "cpwall/potential.hpp"
#include "cpwall/special_functions.hpp"
#include "cpwall/validation.hpp"

namespace py = pybind11;
using namespace cpwall;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Atom-wall dispersion potential engine";

  auto base = py::register_exception<Error>(m, "CpwallError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<RegularizationError>(m, "RegularizationError", base.ptr());
  py::register_exception<DivergentTailError>(m, "DivergentTailError", base.ptr());
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", base.ptr());
  py::register_exception<AccelerationError>(m, "AccelerationError", base.ptr());

  m.def("cosine_integral", &sf::cosine_integral, py::arg("x"));
  m.def("shifted_sine_integral", &sf::shifted_sine_integral, py::arg("x"));
  m.def("aux_F", &sf::aux_F, py::arg("x"));
  m.def("aux_G", &sf::aux_G, py::arg("x"));
  m.def("aux_F_derivative", &sf::aux_F_derivative, py::arg("n"), py::arg("x"));

  py::enum_<KappaRegime>(m, "KappaRegime")
      .value("small", KappaRegime::small)
      .value("large", KappaRegime::large);
  py::enum_<Regime>(m, "Regime")
      .value("general", Regime::general)
      .value("short_asymptotic", Regime::short_asymptotic)
      .value("long_asymptotic", Regime::long_asymptotic)
      .value("perfect_conductor", Regime::perfect_conductor);

  py::class_<DielectricModel>(m, "DielectricModel")
      .def_static("constant", &DielectricModel::constant, py::arg("epsilon"))
      .def_static("single_relaxation", &DielectricModel::single_relaxation, py::arg("chi0"),
                  py::arg("kc"))
      .def_static(
          "tabulated",
          [](const std::vector<std::pair<double, double>>& rows, const std::string& rule) {
            std::vector<TablePoint> t;
            for (const auto& [k, e] : rows) t.push_back({k, e});
            const Interpolation r =
                rule == "linear" ? Interpolation::linear : Interpolation::monotone_cubic;
            return DielectricModel::tabulated(std::move(t), r);
          },
          py::arg("table"), py::arg("interpolation") = "monotone_cubic")
      .def("permittivity", &DielectricModel::permittivity, py::arg("k"));

  m.def("angular_weight", &angular_weight, py::arg("t"), py::arg("eps"));
  m.def("fresnel_te", &fresnel_te, py::arg("t"), py::arg("eps"));
  m.def("fresnel_tm", &fresnel_tm, py::arg("t"), py::arg("eps"));

  py::class_<AtomParams>(m, "AtomParams")
      .def(py::init([](double k0, double alpha0) { return AtomParams{k0, alpha0}; }),
           py::arg("k0") = 1.0, py::arg("alpha0") = 1.0)
      .def_readwrite("k0", &AtomParams::k0)
      .def_readwrite("alpha0", &AtomParams::alpha0);

  py::class_<PotentialResult>(m, "PotentialResult")
      .def_readonly("v_reduced", &PotentialResult::v_reduced)
      .def_readonly("error_estimate", &PotentialResult::error_estimate)
      .def_readonly("regime", &PotentialResult::regime)
      .def("__repr__", [](const PotentialResult& r) {
        return "PotentialResult(v_reduced=" + std::to_string(r.v_reduced) + ", regime=" +
               to_string(r.regime) + ")";
      });

  m.def("perfect_conductor_reduced", &perfect_conductor_reduced, py::arg("x0"));
  m.def("reduced_potential_nondispersive", &reduced_potential_nondispersive, py::arg("x0"),
        py::arg("eps"), py::arg("tol") = 1e-10);
  m.def("reduced_potential_dispersive", &reduced_potential_dispersive, py::arg("x0"),
        py::arg("model"), py::arg("atom") = AtomParams{}, py::arg("tol") = 1e-8);
  m.def("short_range_reduced", &short_range_reduced, py::arg("eps"));
  m.def(
      "long_range_factor",
      [](double kappa, KappaRegime regime, int n_terms) {
        return long_range_factor(kappa, {regime, n_terms});
      },
      py::arg("kappa"), py::arg("regime"), py::arg("n_terms") = 3);
  m.def("pairwise_integrated_factor", &pairwise_integrated_factor, py::arg("kappa"),
        py::arg("n_terms") = 3, py::arg("kappa_max") = 0.5);
  m.def("nonadditivity_ratio", &nonadditivity_ratio, py::arg("kappa"), py::arg("n_terms") = 3,
        py::arg("kappa_max") = 0.2);
  m.def("nonadditivity_coefficients", [] {
    std::vector<std::pair<long long, long long>> out;
    for (const Rational& r : nonadditivity_coefficients()) out.emplace_back(r.num, r.den);
    return out;
  });
  m.def("short_range_bracket_numeric", &short_range_bracket_numeric, py::arg("eps"));
  m.def("long_range_bracket_numeric", &long_range_bracket_numeric, py::arg("eps"));

  m.def(
      "validate",
      [](bool full) {
        py::list out;
        for (const auto& c :
             validation::run(full ? validation::Level::full : validation::Level::quick)) {
          py::dict d;
          d["criterion"] = c.criterion;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["measured"] = c.measured;
          d["expected"] = c.expected;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("full") = false);
}
