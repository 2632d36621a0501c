#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nucleuslab/api.hpp"

namespace py = pybind11;
using namespace nlab;

namespace {

RunConfig make_config(const std::string& family, int D, long q, int N,
                      const std::string& graph_json, int base_vertex, bool large,
                      const std::vector<std::string>& only = {}) {
    RunConfig config;
    if (!graph_json.empty())
        config.graph_json = graph_json;
    else if (!family.empty())
        config.family = parse_family_spec(family, D, q, N);
    else
        throw std::invalid_argument("pass family=... or graph=...");
    config.base_vertex = base_vertex;
    config.large = large;
    config.only = only;
    return config;
}

py::tuple as_tuple(const RunResult& res) {
    return py::make_tuple(res.exit_code, res.output.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact subconstituent-algebra computations on Q-polynomial distance-regular graphs";

    m.def(
        "generate_json",
        [](const std::string& family, int D, long q, int N) {
            RunConfig config;
            config.family = parse_family_spec(family, D, q, N);
            return run_generate(config).output.dump();
        },
        py::arg("family"), py::arg("D") = 1, py::arg("q") = 2, py::arg("N") = 2);

    m.def(
        "analyze_json",
        [](const std::string& family, int D, long q, int N, const std::string& graph,
           int base_vertex, bool large) {
            return as_tuple(run_analyze(make_config(family, D, q, N, graph, base_vertex, large)));
        },
        py::arg("family") = "", py::arg("D") = 1, py::arg("q") = 2, py::arg("N") = 2,
        py::arg("graph") = "", py::arg("base_vertex") = 0, py::arg("large") = false);

    m.def(
        "nucleus_json",
        [](const std::string& family, int D, long q, int N, const std::string& graph,
           int base_vertex, bool large) {
            return as_tuple(run_nucleus(make_config(family, D, q, N, graph, base_vertex, large)));
        },
        py::arg("family") = "", py::arg("D") = 1, py::arg("q") = 2, py::arg("N") = 2,
        py::arg("graph") = "", py::arg("base_vertex") = 0, py::arg("large") = false);

    m.def(
        "verify_json",
        [](const std::string& family, int D, long q, int N, const std::string& graph,
           int base_vertex, bool large, const std::vector<std::string>& only) {
            return as_tuple(
                run_verify(make_config(family, D, q, N, graph, base_vertex, large, only)));
        },
        py::arg("family") = "", py::arg("D") = 1, py::arg("q") = 2, py::arg("N") = 2,
        py::arg("graph") = "", py::arg("base_vertex") = 0, py::arg("large") = false,
        py::arg("only") = std::vector<std::string>{});

    m.def(
        "q_binomial",
        [](unsigned n, unsigned k, long q) { return q_binomial(n, k, Integer(q)).get_str(); },
        py::arg("n"), py::arg("k"), py::arg("q"));

    m.attr("__version__") = "0.1.0";
}
