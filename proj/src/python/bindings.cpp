#include "qlab/errors.hpp"
#include "qlab/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qlab;

namespace {

// reports and artifacts cross the boundary as JSON text; the Python side decodes it
std::string run(const std::string& spec_json, const std::string& suite, int k, int degree, bool timings,
                bool artifacts) {
    SuiteConfig cfg;
    cfg.spec = parse_spec(spec_json);
    cfg.suite = suite_from_string(suite);
    cfg.max_k = k;
    cfg.pbw_degree = degree;
    cfg.degree_cap = degree_cap_from_env();
    cfg.timings = timings;
    cfg.artifacts = artifacts;
    py::gil_scoped_release nogil;
    return emit_json(run_suite(cfg));
}

std::vector<std::tuple<std::vector<int>, int, std::size_t>> decomposition(const std::string& spec_json, int k) {
    Braiding r = build_symmetry(parse_spec(spec_json));
    std::vector<std::tuple<std::vector<int>, int, std::size_t>> out;
    for (const auto& e : decompose(r, k)) out.emplace_back(e.shape.parts, e.a, e.dim);
    return out;
}

std::vector<std::size_t> filtered_dims(const std::string& spec_json, int degree, const std::string& hbar) {
    Braiding r = build_symmetry(parse_spec(spec_json));
    RelationSet rels = relation_set(r, parse_scalar(hbar));
    py::gil_scoped_release nogil;
    return filtered_dimension(rels, degree, degree_cap_from_env()).dims;
}

std::string braiding_matrix(const std::string& spec_json) {
    return to_json(build_symmetry(parse_spec(spec_json)).matrix()).dump();
}

}  // namespace

PYBIND11_MODULE(_qlab, m) {
    m.doc() = "Exact braiding and reflection-equation-algebra checks";
    m.attr("__version__") = tool_version;

    // newest translator is tried first
    py::register_exception<Error>(m, "QlabError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CertificationError>(m, "CertificationError", PyExc_ArithmeticError);

    m.def("run_suite_json", &run, py::arg("spec_json"), py::arg("suite") = "all", py::arg("k") = 0,
          py::arg("degree") = -1, py::arg("timings") = false, py::arg("artifacts") = false);
    m.def("markdown_from_json", [](const std::string& report) { return emit_markdown(report_from_json(Json::parse(report))); });
    m.def("exit_code_from_json", [](const std::string& report) { return exit_code(report_from_json(Json::parse(report))); });
    m.def("decompose", &decomposition, py::arg("spec_json"), py::arg("k"));
    m.def("filtered_dims", &filtered_dims, py::arg("spec_json"), py::arg("degree") = 3, py::arg("hbar") = "1");
    m.def("braiding_matrix_json", &braiding_matrix, py::arg("spec_json"));
    m.def("normalize_scalar", [](const std::string& s) { return parse_scalar(s).str(); });
}
