#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "trigfide/bench.hpp"
#include "trigfide/error.hpp"
#include "trigfide/sine_series.hpp"

namespace py = pybind11;
using namespace trigfide;

namespace {

struct PySolution {
  FideSolution sol;
  ErrorReport report;

  double at(double x) const { return eval_solution(sol.series, x); }
};

PySolution solve_json(const std::string& text, std::optional<int> q) {
  ManufacturedCase c = case_from_json(nlohmann::json::parse(text));
  if (q) c.q = *q;
  PySolution out;
  out.report = run_case(c, out.sol);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "trigonometric collocation for Fredholm integro-differential equations";

  static py::exception<Error> base(m, "TrigfideError");
  static py::exception<StageError> stage(m, "StageError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const StageError& e) {
      py::set_error(stage, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("sine_coeffs", [](const std::vector<double>& samples, double b, double o) {
          const auto grid = UniformGrid1D::make(samples.size(), b, o);
          return forward_sine_coeffs(samples, grid).coeffs;
        },
        py::arg("samples"), py::arg("b"), py::arg("o") = 0.0,
        "Sine coefficients a_1..a_{M-1} of odd samples on x_j = o - b + j*b/M.");

  m.def("interp2d_errors", [](const std::string& kernel, double gamma, int q, int q_probe) {
          py::dict out;
          for (const auto& r : bench_interp2d(kernel, gamma, q, q_probe)) out[py::str(r.metric)] = r.value;
          return out;
        },
        py::arg("kernel"), py::arg("gamma") = 0.5, py::arg("q") = 7, py::arg("q_probe") = 10);

  m.def("boundary_matrix", [](const std::string& bc) { return boundary_matrix(parse_bc_type(bc)); });
  m.def("format_value", &format_value);
  m.attr("CSV_HEADER") = kCsvHeader;

  py::class_<PySolution>(m, "Solution")
      .def_property_readonly("max_e", [](const PySolution& s) { return s.report.max_e; })
      .def_property_readonly("q", [](const PySolution& s) { return s.report.q; })
      .def_property_readonly("M", [](const PySolution& s) { return s.sol.grid.M; })
      .def_property_readonly("path", [](const PySolution& s) { return to_string(s.report.path); })
      .def_property_readonly("rcond", [](const PySolution& s) { return s.report.rcond; })
      .def_property_readonly("csv_row", [](const PySolution& s) { return format_row(row_for(s.report)); })
      .def("__call__", py::vectorize(&PySolution::at));

  m.def("solve_case_json", &solve_json, py::arg("case_json"), py::arg("q") = std::nullopt);
}
