#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>

#include "splf/bounds.hpp"
#include "splf/dickman.hpp"
#include "splf/report.hpp"
#include "splf/shifted_stats.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using splf::u64;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Largest prime factors of shifted primes: segmented sieves, exact threshold "
      "statistics, Dickman's rho and twin-prime-type sieve bounds.";

  py::register_exception<splf::budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<splf::verification_error>(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception<splf::tolerance_error>(m, "ToleranceError", PyExc_RuntimeError);

  py::class_<splf::Exponent>(m, "Exponent", "Exact rational exponent c = num/den in (0, 1)")
      .def(py::init([](u64 num, u64 den) { return splf::Exponent::of(num, den); }), "num"_a,
           "den"_a)
      .def_static(
          "parse", [](const std::string& text) { return splf::Exponent::parse(text); }, "text"_a)
      .def_readonly("num", &splf::Exponent::num)
      .def_readonly("den", &splf::Exponent::den)
      .def_property_readonly("value", &splf::Exponent::value)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", [](const splf::Exponent& c) {
        return "Exponent(" + std::to_string(c.num) + ", " + std::to_string(c.den) + ")";
      });

  py::class_<splf::PrimeTable>(m, "PrimeTable")
      .def_readonly("limit", &splf::PrimeTable::limit)
      .def_readonly("primes", &splf::PrimeTable::primes)
      .def("count", &splf::PrimeTable::count)
      .def("pi", [](const splf::PrimeTable& t, u64 x) { return splf::pi(x, t); }, "x"_a);

  m.def("primes_up_to", [](u64 n) { return splf::primes_up_to(n); }, "n"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("pi", [](u64 x, const splf::PrimeTable& t) { return splf::pi(x, t); }, "x"_a, "table"_a);

  py::class_<splf::LpfSegment>(m, "LpfSegment")
      .def_readonly("lo", &splf::LpfSegment::lo)
      .def_readonly("hi", &splf::LpfSegment::hi)
      .def_readonly("lpf", &splf::LpfSegment::lpf)
      .def("at", &splf::LpfSegment::at, "n"_a);

  m.def(
      "lpf_segment",
      [](u64 lo, u64 hi, const splf::PrimeTable& base) { return splf::lpf_segment(lo, hi, base); },
      "lo"_a, "hi"_a, "base"_a, py::call_guard<py::gil_scoped_release>());

  m.def("holds_threshold", &splf::holds_threshold, "q"_a, "p"_a, "c"_a,
        "Exact test of q >= p^c (ties satisfy).");

  py::class_<splf::DensityRow>(m, "DensityRow")
      .def_readonly("c", &splf::DensityRow::c)
      .def_readonly("t_c", &splf::DensityRow::t_c)
      .def_readonly("t_prime_c", &splf::DensityRow::t_prime_c)
      .def_readonly("pi_x", &splf::DensityRow::pi_x)
      .def_readonly("ratio_t", &splf::DensityRow::ratio_t)
      .def_readonly("ratio_t_prime", &splf::DensityRow::ratio_t_prime)
      .def_readonly("lemma2_gap_normalized", &splf::DensityRow::lemma2_gap_normalized);

  py::class_<splf::DensityScan>(m, "DensityScan")
      .def_readonly("x", &splf::DensityScan::x)
      .def_readonly("rows", &splf::DensityScan::rows);

  m.def(
      "scan_tc",
      [](u64 x, const std::vector<splf::Exponent>& grid, unsigned threads,
         std::optional<std::filesystem::path> cache_dir, u64 x_cap) {
        splf::ScanOptions opts;
        opts.threads = threads;
        opts.cache_dir = std::move(cache_dir);
        opts.x_cap = x_cap;
        return splf::scan_tc(x, grid, opts);
      },
      "x"_a, "grid"_a, "threads"_a = 0, "cache_dir"_a = py::none(), "x_cap"_a = u64(1) << 40,
      py::call_guard<py::gil_scoped_release>());

  m.def("tprime_via_pairs", [](u64 x, splf::Exponent c) { return splf::tprime_via_pairs(x, c); },
        "x"_a, "c"_a, py::call_guard<py::gil_scoped_release>());
  m.def("prime_pair_count", [](u64 h, u64 y) { return splf::prime_pair_count(h, y); }, "h"_a,
        "y"_a, py::call_guard<py::gil_scoped_release>());

  py::class_<splf::RhoSolver>(m, "RhoSolver",
                              "Dickman's rho on [0, u_max], built once, immutable afterwards")
      .def(py::init([](double u_max, double step, double tol) {
             return splf::RhoSolver({u_max, step, tol});
           }),
           "u_max"_a = 20.0, "step"_a = 1.0 / 1024, "tol"_a = 1e-10)
      .def("rho", &splf::RhoSolver::rho, "u"_a)
      .def("eh_density", &splf::RhoSolver::eh_density, "c"_a)
      .def("solve_eh_threshold", &splf::RhoSolver::solve_eh_threshold, "target"_a)
      .def_property_readonly("u_max", &splf::RhoSolver::u_max)
      .def_property_readonly("step", &splf::RhoSolver::step)
      .def_property_readonly("tol", &splf::RhoSolver::tol);

  py::class_<splf::SingularSeriesValue>(m, "SingularSeriesValue")
      .def_readonly("value", &splf::SingularSeriesValue::value)
      .def_readonly("cutoff", &splf::SingularSeriesValue::cutoff)
      .def_readonly("tail_bound", &splf::SingularSeriesValue::tail_bound);

  m.def("singular_series", &splf::singular_series, "cutoff"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("odd_prime_weight", &splf::odd_prime_weight, "h"_a);
  m.def("s_of_z", [](double z) { return splf::s_of_z(z); }, "z"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "s_asymptotic_ratio",
      [](double z, const splf::SingularSeriesValue& ss) { return splf::s_asymptotic_ratio(z, ss); },
      "z"_a, "ss"_a, py::call_guard<py::gil_scoped_release>());
  m.def("pair_bound", &splf::pair_bound, "h"_a, "y"_a, "ss"_a);
  m.def(
      "sieve_rhs",
      [](u64 x, splf::Exponent c, const splf::SingularSeriesValue& ss) {
        return splf::sieve_rhs(x, c, ss);
      },
      "x"_a, "c"_a, "ss"_a, py::call_guard<py::gil_scoped_release>());
  m.def("partial_summation_closed_form", &splf::partial_summation_closed_form, "c"_a, "ss"_a);
  m.def("partial_summation_quadrature", &splf::partial_summation_quadrature, "c"_a, "x"_a, "ss"_a);
  m.def("theorem_bound", &splf::theorem_bound, "c"_a, "8 (1/c - 1), exact in the rationals");

  m.attr("__version__") = std::string(splf::kVersion);
}
