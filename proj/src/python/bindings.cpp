// Copyright 2026 The primelab Authors
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

#include <cctype>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "primelab/density.hpp"
#include "primelab/errors.hpp"
#include "primelab/gap_model.hpp"
#include "primelab/goldbach.hpp"
#include "primelab/harness.hpp"
#include "primelab/oscillation.hpp"
#include "primelab/prime_table.hpp"
#include "primelab/special.hpp"
#include "primelab/zero_table.hpp"
#include "primelab/zeta.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace primelab;

PYBIND11_MODULE(_primelab, m) {
  m.doc() = "Prime tables, gap models, Goldbach counts, zeta and Euler-factor analytics.";
  m.attr("__version__") = PRIMELAB_VERSION;

  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<SingularFactorError>(m, "SingularFactorError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<PrimeTable>(m, "PrimeTable")
      .def_static(
          "build",
          [](std::uint64_t limit, unsigned threads) {
            SieveOptions opts;
            opts.threads = threads;
            py::gil_scoped_release release;
            return PrimeTable::build(limit, opts);
          },
          "limit"_a, "threads"_a = 1)
      .def_property_readonly("limit", &PrimeTable::limit)
      .def("is_prime", &PrimeTable::is_prime, "m"_a)
      .def("count", &PrimeTable::count, "m"_a)
      .def("primes", &PrimeTable::primes, "lo"_a, "hi"_a)
      .def("__len__", &PrimeTable::total)
      .def("__contains__", &PrimeTable::is_prime);

  py::class_<ZeroTable>(m, "ZeroTable")
      .def_static("load", &ZeroTable::load, "path"_a)
      .def_static("load_default", &ZeroTable::load_default)
      .def_static("default_path", &ZeroTable::default_path)
      .def_property_readonly("heights", &ZeroTable::heights)
      .def("height", &ZeroTable::height, "k"_a)
      .def("count_below", &ZeroTable::count_below, "b"_a)
      .def("nearest_distance", &ZeroTable::nearest_distance, "b"_a)
      .def("__len__", &ZeroTable::size);

  // Density.
  m.def("log_integral", py::overload_cast<double>(&log_integral), "n"_a);
  m.def("refined_estimate", py::overload_cast<double>(&refined_estimate), "n"_a);
  m.def(
      "table5_row",
      [](double log10_n) {
        auto r = table5_row(log10_n);
        return py::make_tuple(r.err_pnt, r.err_a);
      },
      "log10_n"_a, "(err_pnt, err_A) at n = 10**log10_n.");

  // Gap model.
  m.def("c2_scale", [](double log10_n) { return c2_scale(Scale::from_log10(log10_n)); }, "log10_n"_a);
  m.def("rho_max_quadfit", [](double log10_n) { return rho_max_quadfit(Scale::from_log10(log10_n)); },
        "log10_n"_a);
  m.def(
      "pnt_error",
      [](double log10_n, double c2, double r, double rho_max) {
        ModelConfig cfg;
        cfg.c2 = c2, cfg.r = r, cfg.rho_max = rho_max;
        return pnt_error(cfg, Scale::from_log10(log10_n));
      },
      "log10_n"_a, "c2"_a = kReferenceC2, "r"_a = 2.0 / 3.0, "rho_max"_a = 2.0);
  m.def(
      "fit_error",
      [](const PrimeTable& t, std::uint64_t n) { return fit_error(gap_histogram(t, n)); }, "table"_a, "n"_a);
  m.attr("TWIN_PRIME_CONSTANT") = kTwinPrimeConstant;

  // Goldbach.
  m.def("goldbach_count", &goldbach_count, "table"_a, "n"_a);
  m.def(
      "goldbach_counts_bulk",
      [](const PrimeTable& t, std::uint64_t max_n) {
        py::gil_scoped_release release;
        return goldbach_counts_bulk(t, max_n);
      },
      "table"_a, "max_n"_a);
  m.def("hl_singular_product", &hl_singular_product, "n"_a);
  m.def("hl_prediction", &hl_prediction, "n"_a, "c2"_a = kTwinPrimeConstant);

  // Zeta.
  m.def("eta_zeta", &eta_zeta, "s"_a, "terms"_a = 0);
  m.def("functional_ratio", &functional_ratio, "s"_a);
  m.def("complex_gamma", &complex_gamma, "s"_a);
  m.def("lambert_w0", &lambert_w0, "x"_a);
  m.def("zero_count", &zero_count, "b"_a);
  m.def("lambert_zero_height", &lambert_zero_height, "k"_a);
  m.def("sieve_density", &sieve_density, "s"_a);
  m.def("table21", [] {
    py::list out;
    for (const auto& r : table21_rows()) out.append(py::make_tuple(r.s, r.zeta, r.m_percent));
    return out;
  });

  // Euler-factor oscillation.
  py::class_<FactorPolar>(m, "FactorPolar")
      .def_readonly("p", &FactorPolar::p)
      .def_readonly("z", &FactorPolar::z)
      .def_readonly("theta", &FactorPolar::theta)
      .def_readonly("r", &FactorPolar::r)
      .def_readonly("phi", &FactorPolar::phi);
  m.def("factor_polar", &factor_polar, "p"_a, "s"_a);

  py::class_<AvgModulus>(m, "AvgModulus")
      .def_readonly("m", &AvgModulus::m)
      .def_readonly("dm_db", &AvgModulus::dm_db)
      .def_readonly("d2m_db2", &AvgModulus::d2m_db2)
      .def_readonly("r_min", &AvgModulus::r_min)
      .def_readonly("r_max", &AvgModulus::r_max);
  m.def("avg_modulus", &avg_modulus, "table"_a, "b"_a, "a"_a, "k"_a);
  m.def("damping_fraction", &damping_fraction, "table"_a, "s"_a, "k"_a);

  py::class_<LocalizationReport>(m, "LocalizationReport")
      .def_readonly("b", &LocalizationReport::b)
      .def_readonly("k", &LocalizationReport::k)
      .def_readonly("m_k", &LocalizationReport::m_k)
      .def_readonly("sin_sum", &LocalizationReport::sin_sum)
      .def_readonly("cos_sum", &LocalizationReport::cos_sum)
      .def_readonly("f_k", &LocalizationReport::f_k)
      .def_readonly("nearest_zero_distance", &LocalizationReport::nearest_zero_distance)
      .def_property_readonly("flagged", &LocalizationReport::flagged);
  m.def(
      "localization_scan",
      [](const PrimeTable& t, double bmin, double bmax, double step, double a, const ZeroTable* zeros,
         unsigned threads) {
        py::gil_scoped_release release;
        return localization_scan(t, bmin, bmax, step, a, zeros, threads);
      },
      "table"_a, "bmin"_a, "bmax"_a, "step"_a = 0.01, "a"_a = 0.5, "zeros"_a = nullptr, "threads"_a = 1);
  m.def("merge_candidates", &merge_candidates, "scan"_a, "radius"_a = 0.05);

  // Table and figure files.
  m.def(
      "write_table",
      [](const std::string& id, std::uint64_t sieve_limit, const std::filesystem::path& out,
         const std::string& format) {
        RunConfig cfg;
        cfg.sieve_limit = sieve_limit;
        cfg.output_dir = out;
        cfg.format = parse_format(format);
        cfg.validate();
        Lab lab(cfg);
        py::gil_scoped_release release;
        if (!id.empty() && std::isdigit(static_cast<unsigned char>(id[0]))) return run_table(lab, std::stoi(id));
        return run_figure(lab, id);
      },
      "id"_a, "sieve_limit"_a = 10'000'000, "out"_a = "out", "format"_a = "csv",
      "Write a table (numeric id) or figure dataset and return its path.");
}
