#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "altfree/analysis.hpp"
#include "altfree/cli.hpp"
#include "altfree/constructions.hpp"
#include "altfree/corpus.hpp"
#include "altfree/io.hpp"
#include "altfree/search.hpp"
#include "altfree/types.hpp"

namespace py = pybind11;
using namespace altfree;

namespace {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SearchBudget make_budget(std::uint64_t node_limit, double time_limit_s) {
    SearchBudget b;
    b.node_limit = node_limit;
    b.time_limit_s = time_limit_s;
    return b;
}

template <typename T>
py::object unwrap(const SearchResult<T>& r, const std::function<py::object(const T&)>& convert) {
    if (r.exhausted_budget()) throw BudgetError("search budget exhausted");
    if (r.none()) return py::none();
    return convert(*r.value);
}

py::dict wiring_to_dict(const WiringDiagram& w) {
    py::dict d;
    d["n_wires"] = w.n_wires;
    d["initial"] = w.initial;
    d["events"] = w.events;
    return d;
}

}  // namespace

PYBIND11_MODULE(_altfree, m) {
    m.doc() = "alternation-free hypergraphs: freeness checks, pattern search, colorings, "
              "hitting sets, and extremal constructions";

    py::register_exception<BudgetError>(m, "BudgetExhausted");

    py::class_<BinaryMatrix>(m, "BinaryMatrix")
        .def(py::init<>())
        .def(py::init(&BinaryMatrix::from_rows), py::arg("rows"),
             "Build from a list of '0'/'1' strings.")
        .def_property_readonly("n_rows", &BinaryMatrix::n_rows)
        .def_property_readonly("n_cols", &BinaryMatrix::n_cols)
        .def("get", &BinaryMatrix::get, py::arg("row"), py::arg("col"))
        .def("to_strings", &BinaryMatrix::to_strings)
        .def("transposed", &BinaryMatrix::transposed)
        .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
        .def("__repr__", [](const BinaryMatrix& a) {
            return "BinaryMatrix(" + std::to_string(a.n_rows()) + "x" + std::to_string(a.n_cols()) + ")";
        });

    py::class_<OrderedHypergraph>(m, "OrderedHypergraph")
        .def(py::init([](int n, const std::vector<std::vector<int>>& edges) {
                 return make_hypergraph(n, edges);
             }),
             py::arg("n_vertices"), py::arg("edges"))
        .def_readonly("n_vertices", &OrderedHypergraph::n_vertices)
        .def_readonly("edges", &OrderedHypergraph::edges)
        .def("__eq__", [](const OrderedHypergraph& a, const OrderedHypergraph& b) { return a == b; })
        .def("__repr__", [](const OrderedHypergraph& h) {
            return "OrderedHypergraph(n=" + std::to_string(h.n_vertices) +
                   ", m=" + std::to_string(h.edges.size()) + ")";
        });

    py::class_<Pattern>(m, "Pattern")
        .def_readonly("matrix", &Pattern::matrix)
        .def_readonly("name", &Pattern::name)
        .def_static("x", &Pattern::X, py::arg("t"))
        .def_static("xp", &Pattern::Xp, py::arg("t"))
        .def_static("xt", &Pattern::XT, py::arg("t"))
        .def_static("xpt", &Pattern::XpT, py::arg("t"))
        .def_static("by_name", &Pattern::by_name, py::arg("name"));

    m.def("incidence", &incidence, py::arg("h"));
    m.def("from_incidence", &from_incidence, py::arg("matrix"));
    m.def("dualize", &dualize, py::arg("h"));
    m.def("apply_vertex_order", &apply_vertex_order, py::arg("h"), py::arg("order"));
    m.def("alternation_length", &alternation_length, py::arg("h"), py::arg("i"), py::arg("j"));
    m.def("alternation_sequence", &alternation_sequence, py::arg("h"), py::arg("i"), py::arg("j"));

    m.def(
        "is_free_ordered",
        [](const OrderedHypergraph& h, int t) {
            const FreenessReport r = is_free_ordered(h, t);
            py::dict d;
            d["is_free"] = r.is_free;
            d["t"] = r.t;
            if (r.witness) {
                d["witness"] = r.witness->vertices;
                d["edges"] = py::make_tuple(r.edge_a, r.edge_b);
            }
            return d;
        },
        py::arg("h"), py::arg("t"));

    m.def(
        "contains_pattern",
        [](const BinaryMatrix& mat, const Pattern& p) -> py::object {
            const auto w = contains_pattern(mat, p);
            if (!w) return py::none();
            return py::make_tuple(w->rows, w->cols);
        },
        py::arg("matrix"), py::arg("pattern"));

    m.def(
        "lex_sort_columns",
        [](const BinaryMatrix& mat) {
            auto r = lex_sort_columns(mat);
            return py::make_tuple(r.matrix, r.perm);
        },
        py::arg("matrix"));

    m.def(
        "vc_dimension",
        [](const OrderedHypergraph& h, py::object cap) {
            return vc_dimension(h, cap.is_none() ? h.n_vertices : cap.cast<int>());
        },
        py::arg("h"), py::arg("cap") = py::none());

    m.def(
        "max_homogeneous_square",
        [](const BinaryMatrix& mat, int exact_limit) {
            const HomogeneousBlock b = max_homogeneous_square(mat, exact_limit);
            py::dict d;
            d["rows"] = b.rows;
            d["cols"] = b.cols;
            d["value"] = b.value;
            d["exact"] = b.exact;
            return d;
        },
        py::arg("matrix"), py::arg("exact_limit") = 16);

    m.def(
        "find_free_ordering",
        [](const OrderedHypergraph& h, int t, std::uint64_t node_limit, double time_limit_s,
           bool fast) {
            return unwrap<std::vector<int>>(
                find_free_ordering(h, t, make_budget(node_limit, time_limit_s), fast),
                [](const std::vector<int>& v) -> py::object { return py::cast(v); });
        },
        py::arg("h"), py::arg("t"), py::arg("node_limit") = std::uint64_t{100000000},
        py::arg("time_limit_s") = 60.0, py::arg("fast") = false);

    m.def(
        "is_dual_free",
        [](const OrderedHypergraph& h, int t, std::uint64_t node_limit, double time_limit_s) {
            return unwrap<DualOrderings>(
                is_dual_free(h, t, make_budget(node_limit, time_limit_s)),
                [](const DualOrderings& d) -> py::object {
                    return py::make_tuple(d.row_order, d.col_order);
                });
        },
        py::arg("h"), py::arg("t"), py::arg("node_limit") = std::uint64_t{100000000},
        py::arg("time_limit_s") = 60.0);

    m.def(
        "proper_coloring",
        [](const OrderedHypergraph& h, int colors, int min_size, std::uint64_t node_limit,
           double time_limit_s) {
            return unwrap<std::vector<int>>(
                proper_coloring(h, colors, min_size, make_budget(node_limit, time_limit_s)),
                [](const std::vector<int>& v) -> py::object { return py::cast(v); });
        },
        py::arg("h"), py::arg("colors"), py::arg("min_size") = 1,
        py::arg("node_limit") = std::uint64_t{100000000}, py::arg("time_limit_s") = 60.0);

    m.def(
        "shallow_hitting_set",
        [](const OrderedHypergraph& h, int depth, std::uint64_t node_limit, double time_limit_s) {
            return unwrap<std::vector<int>>(
                shallow_hitting_set(h, depth, make_budget(node_limit, time_limit_s)),
                [](const std::vector<int>& v) -> py::object { return py::cast(v); });
        },
        py::arg("h"), py::arg("depth"), py::arg("node_limit") = std::uint64_t{100000000},
        py::arg("time_limit_s") = 60.0);

    m.def(
        "unsplittable_subset",
        [](const OrderedHypergraph& h, int t, int edge, int k) -> py::object {
            const auto s = unsplittable_subset(h, t, edge, k);
            if (!s) return py::none();
            return py::cast(*s);
        },
        py::arg("h"), py::arg("t"), py::arg("edge"), py::arg("k"));

    m.def(
        "max_free_uniform_count",
        [](int n, int k, int t, std::uint64_t node_limit, double time_limit_s) {
            const auto r = max_free_uniform_count(n, k, t, make_budget(node_limit, time_limit_s));
            if (r.exhausted_budget()) throw BudgetError("search budget exhausted");
            py::dict d;
            d["count"] = r.value->count;
            d["edges"] = r.value->edges;
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("node_limit") = std::uint64_t{100000000},
        py::arg("time_limit_s") = 60.0);

    m.def("build_tree", &build_tree, py::arg("arity"), py::arg("depth"));
    m.def("build_prefix_union", &build_prefix_union, py::arg("n"), py::arg("t"));

    m.def(
        "build_dual_extremal",
        [](int n, int t) {
            const DualExtremal d = build_dual_extremal(n, t);
            py::dict out;
            out["wiring"] = wiring_to_dict(d.wiring);
            out["hypergraph"] = d.hypergraph;
            out["n_a"] = d.n_a;
            out["n_b"] = d.n_b;
            return out;
        },
        py::arg("n"), py::arg("t"));

    m.def(
        "wiring_crossings",
        [](int n_wires, const std::vector<int>& initial, const std::vector<int>& events) {
            const CrossingReport r = wiring_crossings(WiringDiagram{n_wires, initial, events});
            py::dict d;
            d["counts"] = r.counts;
            d["total"] = r.total;
            d["max_pair"] = r.max_pair;
            return d;
        },
        py::arg("n_wires"), py::arg("initial"), py::arg("events"));

    m.def("corpus_entries", []() {
        py::list out;
        for (const auto& e : reference_corpus()) {
            py::dict d;
            d["name"] = e.name;
            d["matrix"] = e.matrix;
            d["rows_are_vertices"] = e.orientation == Orientation::rows_are_vertices;
            d["hypergraph"] = e.hypergraph();
            d["claims"] = static_cast<int>(e.claims.size());
            out.append(std::move(d));
        }
        return out;
    });

    m.def("corpus_verify", []() {
        py::list out;
        for (const auto& e : reference_corpus())
            for (const auto& oc : verify_corpus_entry(e))
                out.append(py::make_tuple(e.name, oc.description, oc.ok));
        return out;
    });

    m.def("parse_hypergraph", [](const std::string& s) { return parse_hypergraph(s); }, py::arg("text"));
    m.def("serialize_hypergraph", &serialize_hypergraph, py::arg("h"));
    m.def("parse_matrix", [](const std::string& s) { return parse_matrix(s); }, py::arg("text"));
    m.def("serialize_matrix", &serialize_matrix, py::arg("matrix"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            const CommandResult r = run(args);
            return py::make_tuple(r.exit_code, r.output, r.diagnostics);
        },
        py::arg("args"), "Run one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
