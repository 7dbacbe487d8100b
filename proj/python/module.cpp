// thin pybind11 surface: graphs and colorings as first-class objects, the
// structured reports as JSON strings rendered by the same emitters the CLI
// uses, so Python sees byte-identical output
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ramsey/report.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

Color color_from(const std::string& s) {
    if (s == "red") return Color::red;
    if (s == "blue") return Color::blue;
    throw parse_error("color must be 'red' or 'blue'");
}

Strictness profile_from(const std::string& s) {
    if (s == "paper") return Strictness::paper;
    if (s == "relaxed") return Strictness::relaxed;
    throw parse_error("profile must be 'paper' or 'relaxed'");
}

py::dict pair_dict(const MonoPair& p) {
    py::dict d;
    d["color"] = color_name(p.color);
    d["X"] = p.X.members();
    d["Y"] = p.Y.members();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "constructive 2-color Ramsey machinery";

    py::register_exception<error>(m, "RamseyError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def_static("complete", &Graph::complete)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_static("complete_bipartite", &Graph::complete_bipartite)
        .def_static("parse",
                    [](const std::string& text) {
                        std::istringstream ss(text);
                        return parse_graph(ss);
                    })
        .def("format", [](const Graph& g) { return format_graph(g); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) +
                   ")";
        });

    py::class_<TwoColoring>(m, "TwoColoring")
        .def_property_readonly("N", &TwoColoring::N)
        .def_property_readonly("red_m", &TwoColoring::red_m)
        .def_property_readonly("blue_m", &TwoColoring::blue_m)
        .def("is_red",
             [](const TwoColoring& c, int u, int v) { return c.red_nbrs(u).test(v); })
        .def("flipped", &TwoColoring::flipped)
        .def_static("parse",
                    [](const std::string& text) {
                        std::istringstream ss(text);
                        return parse_coloring(ss);
                    })
        .def("format", [](const TwoColoring& c) { return format_coloring(c); })
        .def("__repr__", [](const TwoColoring& c) {
            return "TwoColoring(N=" + std::to_string(c.N()) +
                   ", red_m=" + std::to_string(c.red_m()) + ")";
        });

    m.def("gen_uniform", &gen_uniform, py::arg("n"), py::arg("seed"));
    m.def(
        "gen_biased",
        [](int n, const std::string& p, std::uint64_t seed) {
            return gen_biased(n, parse_rat(p), seed);
        },
        py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_paley", &gen_paley, py::arg("n"));

    m.def(
        "es_pair",
        [](const TwoColoring& c, int k, int l) { return pair_dict(es_pair(c, k, l)); },
        py::arg("coloring"), py::arg("k"), py::arg("l"));

    m.def(
        "esz_pair",
        [](const TwoColoring& c, const std::string& eps, long t,
           const std::string& strictness) {
            ExtractionParams p;
            p.eps = parse_rat(eps);
            p.t = t;
            p.strictness = profile_from(strictness);
            auto [pair, trace] = esz_pair(c, p);
            py::dict d = pair_dict(pair);
            d["trace_json"] = esz_pair_json(pair, trace);
            return d;
        },
        py::arg("coloring"), py::arg("eps"), py::arg("t"),
        py::arg("strictness") = "relaxed");

    m.def(
        "find_mono_copy",
        [](const TwoColoring& c, const std::string& color, const Graph& pattern)
            -> std::optional<std::vector<int>> {
            auto e = find_mono_copy(c, color_from(color), pattern);
            if (!e) return std::nullopt;
            return e->map;
        },
        py::arg("coloring"), py::arg("color"), py::arg("pattern"));

    m.def(
        "sparse_subset",
        [](const Graph& host, const Graph& pattern, const std::string& eps) {
            return sparse_subset(host, pattern, parse_rat(eps)).members();
        },
        py::arg("host"), py::arg("pattern"), py::arg("eps"));

    m.def(
        "prove_or_find",
        [](const TwoColoring& c, const Graph& G, const std::string& profile) {
            return trace_json(prove_or_find(c, G, profile_from(profile)));
        },
        py::arg("coloring"), py::arg("pattern"), py::arg("profile") = "relaxed");

    m.def(
        "trace_bounds", [](long m) { return bound_report_json(trace_bounds(m)); },
        py::arg("m"));

    m.def(
        "verify_constants",
        [](const std::vector<long>& ms, int grid_points,
           const std::vector<std::string>& eps) {
            std::vector<Rat> rs;
            for (const std::string& s : eps) rs.push_back(parse_rat(s));
            return inequality_report_json(verify_inequalities(ms, grid_points, rs));
        },
        py::arg("ms"), py::arg("grid_points") = 60,
        py::arg("eps") = std::vector<std::string>{"1/7", "1/8"});

    m.def(
        "arrows",
        [](int N, const Graph& pattern, long max_edges) {
            return arrow_result_json(arrows(N, pattern, max_edges));
        },
        py::arg("n"), py::arg("pattern"), py::arg("max_edges") = 30);

    m.def("ramsey_number_exact", &ramsey_number_exact, py::arg("pattern"),
          py::arg("n_max"), py::arg("max_edges") = 30);
}
