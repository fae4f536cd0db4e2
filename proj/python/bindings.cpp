#include "cellforms/cli.hpp"
#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/ideal.hpp"
#include "cellforms/json_io.hpp"
#include "cellforms/reports.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cellforms;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

FormSum form_arg(const py::handle& o, std::optional<int> n = std::nullopt) { return any_form_from_json(from_py(o), n); }

}  // namespace

PYBIND11_MODULE(_cellforms, m) {
  m.doc() = "Cell forms on M_{0,n}: shuffle ideal, convergence on the standard cell, periods";

  auto base = py::register_exception<Error>(m, "CellformsError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NoConvergenceError>(m, "NoConvergenceError", base.ptr());
  py::register_exception<UnstableError>(m, "UnstableError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  m.def("polygons", [](int n) { return to_py(polygons_report(n)); }, py::arg("n"));
  m.def("basis01", [](int n) { return to_py(basis01_report(n)); }, py::arg("n"));
  m.def("canonicalize", [](const py::object& labels) { return to_py(to_json(polygon_from_json(from_py(labels)))); },
        py::arg("labels"));
  m.def("cell_form", [](const py::object& polygon) {
    return to_py(to_json(FormSum(cell_form(polygon_from_json(from_py(polygon))))));
  }, py::arg("polygon"));
  m.def("shuffle", [](const py::object& a, const py::object& b) {
    Json out = Json::array();
    for (const auto& w : shuffle(word_from_json(from_py(a)), word_from_json(from_py(b)))) {
      out.push_back(to_json(std::span<const Label>(w)));
    }
    return to_py(out);
  }, py::arg("a"), py::arg("b"));
  m.def("ideal_generators", [](int n) { return to_py(ideal_generators_report(n)); }, py::arg("n"));
  m.def("verify_kernel", [](int n, std::uint64_t seed) {
    const KernelReport r = verify_kernel(n, seed);
    return to_py(Json{{"n", r.n},
                      {"generators", r.generators},
                      {"points", r.points},
                      {"max_abs", to_string(r.max_abs_value)},
                      {"ok", r.ok()}});
  }, py::arg("n"), py::arg("seed") = 0);
  m.def("reduce", [](const py::object& polygon_sum, std::uint64_t seed) {
    return to_py(reduce_report(polygon_sum_from_json(from_py(polygon_sum)), seed));
  }, py::arg("polygon_sum"), py::arg("seed") = 0);
  m.def("rank", [](const py::list& forms, std::uint64_t seed) {
    std::vector<FormSum> fs;
    for (const auto& f : forms) fs.push_back(form_arg(f));
    return rank(fs, seed);
  }, py::arg("forms"), py::arg("seed") = 0, "Rank of a list of FormSums or PolygonSums.");
  m.def("converges_on_delta", [](const py::object& form, std::uint64_t seed) {
    return converges_on_delta(form_arg(form), seed);
  }, py::arg("form"), py::arg("seed") = 0);
  m.def("pole_orders", [](const py::object& form, std::uint64_t seed) {
    return to_py(pole_report(form_arg(form), seed));
  }, py::arg("form"), py::arg("seed") = 0);
  m.def("convergent_basis", [](int n, std::uint64_t seed) { return to_py(convergent_basis_report(n, seed)); },
        py::arg("n"), py::arg("seed") = 0);
  m.def("insertion_forms", [](int n, std::uint64_t seed) { return to_py(insertion_forms_report(n, seed)); },
        py::arg("n"), py::arg("seed") = 0);
  m.def("delta_basis", [](int n, std::uint64_t seed) { return to_py(delta_basis_report(n, seed)); }, py::arg("n"),
        py::arg("seed") = 0);
  m.def("integrate", [](const py::object& form, std::optional<double> tol, std::optional<int> n, int nodes,
                        std::optional<int> levels, std::uint64_t seed) {
    const FormSum f = form_arg(form, n);
    QuadratureSpec q = QuadratureSpec::defaults_for(f.n() > 0 ? f.n() : n.value_or(4));
    q.nodes_per_axis = nodes;
    if (tol) q.tolerance = *tol;
    if (levels) q.levels = *levels;
    py::gil_scoped_release release;
    Json out = integrate_report(f, q, seed);
    py::gil_scoped_acquire acquire;
    return to_py(out);
  }, py::arg("form"), py::arg("tol") = py::none(), py::arg("n") = py::none(), py::arg("nodes") = 8,
     py::arg("levels") = py::none(), py::arg("seed") = 0);
  m.def("mzv_values", [](int weight, int digits) {
    Json out = Json::array();
    for (const auto& e : mzv_values(weight, digits).entries) out.push_back(Json{{"name", e.name}, {"decimal", e.decimal}});
    return to_py(out);
  }, py::arg("weight"), py::arg("digits") = 40);
  m.def("mzv_fit", [](double value, int weight, long max_den, double eps) {
    return to_py(to_json(fit_mzv(value, weight, max_den, eps)));
  }, py::arg("value"), py::arg("weight"), py::arg("max_den") = 64, py::arg("eps") = 1e-8);
  m.def("zagier_dims", &zagier_dims, py::arg("N"));
  m.def("verify", [](int n, std::uint64_t seed) { return to_py(verify_report(n, seed)); }, py::arg("n"),
        py::arg("seed") = 0);
  m.def("run", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    const int code = cli::run(args, in, out);
    return py::make_tuple(code, out.str());
  }, py::arg("args"), py::arg("stdin") = "", "Run a command-line invocation; returns (exit code, output).");
}
