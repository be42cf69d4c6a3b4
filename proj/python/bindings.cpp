#include "weightcat/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weightcat;

PYBIND11_MODULE(_weightcat, m) {
    m.doc() = "weight modules in categories O_{S,theta}: native core";

    py::register_exception<CertificationImpossible>(m, "CertificationImpossible", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<CommandResult>(m, "CommandResult")
        .def_property_readonly("json", [](const CommandResult& r) { return r.body.dump(); })
        .def_readonly("text", &CommandResult::text)
        .def_readonly("passed", &CommandResult::pass);

    m.attr("SCHEMA") = kSchema;
    m.def("lemma_ids", &lemma_ids);
    m.def("classify", &run_classify, py::arg("type"), py::arg("theta") = std::vector<int>{});
    m.def(
        "verify",
        [](const std::string& module, const std::string& a, std::optional<std::vector<int>> theta, int B, int D) {
            py::gil_scoped_release release;
            return run_verify(module, a, theta, B, D);
        },
        py::arg("module"), py::arg("a"), py::arg("theta") = py::none(), py::arg("B") = 3, py::arg("D") = 4);
    m.def(
        "ext",
        [](const std::string& module, const std::string& a, const std::string& b, int B) {
            py::gil_scoped_release release;
            return run_ext(module, a, b, B);
        },
        py::arg("module"), py::arg("a"), py::arg("b") = "", py::arg("B") = 3);
    m.def(
        "lab",
        [](const std::string& id, const std::string& a, const std::string& c, const std::string& type,
           const std::vector<int>& theta, int B, int D, unsigned seed) {
            py::gil_scoped_release release;
            return run_lab(id, a, c, type, theta, B, D, seed);
        },
        py::arg("id"), py::arg("a") = "", py::arg("c") = "", py::arg("type") = "",
        py::arg("theta") = std::vector<int>{}, py::arg("B") = 3, py::arg("D") = 4, py::arg("seed") = 1);

}
