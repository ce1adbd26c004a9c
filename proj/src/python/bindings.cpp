#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antikit/antimatching.hpp"
#include "antikit/antitree.hpp"
#include "antikit/antiwalk.hpp"
#include "antikit/embed.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/graph_io.hpp"
#include "antikit/harness.hpp"
#include "antikit/packing.hpp"
#include "antikit/tree_decomp.hpp"

namespace py = pybind11;
using namespace antikit;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

std::vector<std::pair<int, int>> edge_pairs(const Digraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.from, e.to);
    return out;
}

py::object distance(const Distance& d) { return d ? py::object(py::int_(*d)) : py::object(py::none()); }

}  // namespace

PYBIND11_MODULE(_antikit, m) {
    m.doc() = "Antidirected subgraph toolkit";

    static py::exception<Error> error_type(m, "AntikitError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& ex) {
            py::object e = py::reinterpret_borrow<py::object>(error_type.ptr())(ex.what());
            PyObject_SetAttrString(e.ptr(), "code", py::str(std::string(to_string(ex.code()))).ptr());
            PyErr_SetObject(error_type.ptr(), e.ptr());
        }
    });

    py::class_<OrientedGraph>(m, "OrientedGraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return OrientedGraph::validate(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &OrientedGraph::order)
        .def_property_readonly("m", &OrientedGraph::size)
        .def("edges", [](const OrientedGraph& g) { return edge_pairs(g); })
        .def("has_edge", &OrientedGraph::has_edge)
        .def("out_degree", &OrientedGraph::out_degree)
        .def("in_degree", &OrientedGraph::in_degree)
        .def("reversed", &OrientedGraph::reversed)
        .def("to_oedge", [](const OrientedGraph& g) { return write_oedge(g); })
        .def_static("from_oedge", [](const std::string& text) { return parse_oedge(text); })
        .def("__eq__", [](const OrientedGraph& a, const OrientedGraph& b) { return a == b; })
        .def("__repr__", [](const OrientedGraph& g) {
            return "<OrientedGraph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("degree_profile", [](const OrientedGraph& g) {
        const DegreeProfile p = degree_profile(g);
        py::dict d;
        d["min_out"] = p.min_out;
        d["min_in"] = p.min_in;
        d["min_semidegree"] = p.min_semidegree;
        d["min_pseudo_semidegree"] = p.min_pseudo_semidegree;
        d["edge_count"] = p.edge_count;
        return d;
    });
    m.def("is_antidirected", [](const OrientedGraph& g) { return is_antidirected(g); });

    m.def("reach_from", [](const OrientedGraph& g, int a) {
        const ReachReport r = reach_from(g, a);
        py::list ood;
        py::list oid;
        for (Vertex v = 0; v < g.order(); ++v) {
            ood.append(distance(r.ood[v]));
            oid.append(distance(r.oid[v]));
        }
        py::dict d;
        d["ood"] = ood;
        d["oid"] = oid;
        return d;
    });
    m.def("is_antiwalk", [](const OrientedGraph& g, const std::vector<int>& seq) { return is_antiwalk(g, seq); });

    m.def(
        "find_antimatching",
        [](const OrientedGraph& g, int t, int anchor, bool bounded, std::optional<int> bound) {
            const AntimatchingRequest req{t, anchor, bound};
            return edge_pairs(Digraph::from_edges(
                g.order(), (bounded ? find_bounded_antimatching(g, req) : find_antimatching(g, req)).edges));
        },
        py::arg("g"), py::arg("t"), py::arg("anchor"), py::arg("bounded") = false, py::arg("bound") = std::nullopt,
        "Edges (tail, head) of a connected antimatching; anchor edge first in the result order of tails.");
    m.def("oracle_max_antimatching", &oracle_max_antimatching);

    m.def(
        "beta_decompose",
        [](int n, const std::vector<std::pair<int, int>>& edges, int root, bool root_is_source, double beta) {
            const RootedAntiTree t = RootedAntiTree::from_undirected(n, edges, root, root_is_source);
            const BetaDecomposition d = beta_decompose(t, beta);
            std::string why;
            py::dict out;
            out["w"] = d.w_set;
            py::list trees;
            for (const Subtree& s : d.trees) trees.append(py::make_tuple(s.root, s.vertices));
            out["trees"] = trees;
            out["valid"] = is_beta_decomposition(t, d, &why);
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("root"), py::arg("root_is_source"), py::arg("beta"));

    m.def(
        "pack",
        [](const std::vector<std::pair<long long, long long>>& items, long long mm, int t, double alpha, bool check) {
            PackingInstance inst;
            for (auto [p, q] : items) inst.items.push_back({p, q});
            inst.m = mm;
            inst.t = t;
            inst.alpha = alpha;
            PackOptions opts;
            opts.check_hypotheses = check;
            return pack(inst, opts).assignment;
        },
        py::arg("items"), py::arg("m"), py::arg("t"), py::arg("alpha"), py::arg("check_hypotheses") = true);

    m.def("blowup", &blowup);
    m.def("directed_triangle", &directed_triangle);
    m.def("burr_graph", &burr_graph);
    m.def("transitive_tournament", &transitive_tournament);
    m.def(
        "build_antisubdivision",
        [](int h, const std::vector<int>& lengths) {
            AntiSubdivisionSpec spec;
            spec.h = h;
            spec.lengths = lengths;
            const AntiSubdivision s = build_antisubdivision(spec);
            return py::make_tuple(s.pattern, s.branch, s.is_long);
        },
        py::arg("h"), py::arg("lengths"));
    m.def(
        "peel_pseudo",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k) {
            const PeelResult r = peel_pseudo(Digraph::from_edges(n, to_edges(edges)), k);
            return py::make_tuple(r.graph.order(), edge_pairs(r.graph), r.origin);
        },
        py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def("four_copy", [](const OrientedGraph& d) {
        const FourCopyGadget g = four_copy(d);
        std::vector<std::string> tags;
        for (CopyTag t : g.map.copy_of) tags.emplace_back(to_string(t));
        return py::make_tuple(g.graph, tags, g.map.origin, g.v_star, g.map.reversed);
    });

    m.def(
        "embed_exact",
        [](const OrientedGraph& pattern, const OrientedGraph& host, std::optional<int> x,
           std::optional<std::vector<int>> allowed) -> std::optional<std::vector<int>> {
            std::optional<Pin> pin;
            if (x) {
                Pin p;
                p.x = *x;
                if (allowed) {
                    p.allowed = *allowed;
                } else {
                    for (Vertex v = 0; v < host.order(); ++v) p.allowed.push_back(v);
                }
                pin = p;
            }
            const auto found = embed_exact(pattern, host, pin);
            if (!found) return std::nullopt;
            return found->image;
        },
        py::arg("pattern"), py::arg("host"), py::arg("x") = std::nullopt, py::arg("allowed") = std::nullopt,
        "Image list of an embedding, or None when the pattern does not embed.");
    m.def("longest_antipath", [](const OrientedGraph& g) { return longest_antipath(g); });

    m.def("oriented_count", &oriented_count);
    m.def("oriented_classes", [](int n) { return oriented_classes(n); });

    m.def(
        "verify",
        [](const std::string& statement, const std::vector<int>& n_range, const std::vector<int>& k_range,
           int samples, std::uint64_t seed, bool iso, int workers) {
            VerificationJob job;
            job.statement = parse_statement(statement);
            job.n_range = n_range;
            job.k_range = k_range;
            job.mode = samples > 0 ? Mode::sampled : Mode::exhaustive;
            job.sample_count = samples;
            job.seed = seed;
            job.up_to_isomorphism = iso;
            job.workers = workers;
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = run(job);
            }
            return report_to_json(r).dump();
        },
        py::arg("statement"), py::arg("n_range") = std::vector<int>{}, py::arg("k_range") = std::vector<int>{},
        py::arg("samples") = 0, py::arg("seed") = 0, py::arg("iso") = false, py::arg("workers") = 0,
        "Runs a verification job and returns the report as a JSON string.");
}
