#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcn/bounds.hpp"
#include "tcn/cli.hpp"
#include "tcn/error.hpp"
#include "tcn/report_io.hpp"
#include "tcn/space_expr.hpp"
#include "tcn/sphere_planner.hpp"

namespace py = pybind11;

namespace {

std::vector<tcn::SpherePoint> to_points(const std::vector<std::vector<double>>& coords)
{
    std::vector<tcn::SpherePoint> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(tcn::SpherePoint::normalized(c));
    return out;
}

tcn::SpaceDescriptor space_of(const std::string& expr, const std::string& field)
{
    return tcn::evaluate(tcn::parse_space(expr), tcn::Field::parse(field));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bounds on higher topological complexity and the odd-sphere motion planner.";

    auto error = py::register_exception<tcn::Error>(m, "Error", PyExc_RuntimeError);
    auto input = py::register_exception<tcn::InputError>(m, "InputError", error.ptr());
    py::register_exception<tcn::MetadataError>(m, "MetadataError", error.ptr());
    py::register_exception<tcn::FieldError>(m, "FieldError", error.ptr());
    py::register_exception<tcn::SizeLimitError>(m, "SizeLimitError", input.ptr());

    m.def("parse_space", [](const std::string& text) { return tcn::pretty_print(tcn::parse_space(text)); },
          py::arg("text"), "Canonical form of a space expression.");

    m.def(
        "zcl",
        [](const std::string& expr, int n, const std::string& field) {
            return tcn::zero_divisor_cup_length(space_of(expr, field).algebra, n).m;
        },
        py::arg("space"), py::arg("n"), py::arg("field") = "Q");

    m.def(
        "bounds_json",
        [](const std::string& expr, int n, const std::string& field, bool certificate) {
            return tcn::report_to_json(tcn::bounds_report(space_of(expr, field), n, certificate)).dump();
        },
        py::arg("space"), py::arg("n"), py::arg("field") = "Q", py::arg("certificate") = false);

    m.def(
        "plan_json",
        [](const std::vector<std::vector<double>>& config, int samples, double tol) {
            return tcn::plan_to_json(tcn::plan(to_points(config), samples, tol)).dump();
        },
        py::arg("config"), py::arg("samples") = 64, py::arg("antipode_tol") = tcn::kDefaultAntipodeTolerance);

    m.def(
        "domain_index",
        [](const std::vector<std::vector<double>>& config, double tol) {
            return tcn::domain_index(to_points(config), tol);
        },
        py::arg("config"), py::arg("antipode_tol") = tcn::kDefaultAntipodeTolerance);

    m.def("domain_count", &tcn::domain_count, py::arg("k"), py::arg("n"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"tcn"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = tcn::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
