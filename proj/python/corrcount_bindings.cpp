// Python bindings: the main operations of the toolkit, with exact values
// crossing the boundary losslessly (counts as Python ints, rationals as
// fractions.Fraction; rational parameters accept Fraction/int/str).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "corrcount/bounds.hpp"
#include "corrcount/correspondence.hpp"
#include "corrcount/counting.hpp"
#include "corrcount/extension.hpp"
#include "corrcount/graph.hpp"
#include "corrcount/io.hpp"
#include "corrcount/plane.hpp"
#include "corrcount/structure.hpp"

namespace py = pybind11;
using namespace corrcount;

namespace {

py::object big_to_py(const BigInt& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object rat_to_py(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(BigInt(c.get_num())), big_to_py(BigInt(c.get_den())));
}

// Accepts Fraction, int, or "p/q" text.
Rational rat_from_py(const py::object& obj) {
    return parse_rational(py::str(obj).cast<std::string>());
}

BigInt big_from_py(const py::object& obj) {
    return BigInt(py::str(obj).cast<std::string>());
}

py::dict count_result_dict(const CountResult& r) {
    py::dict d;
    d["count"] = big_to_py(r.count);
    d["explored_nodes"] = r.explored_nodes;
    d["truncated"] = r.truncated;
    return d;
}

py::dict verdict_dict(const DeletabilityVerdict& v) {
    py::dict d;
    switch (v.status) {
        case DeletabilityStatus::deletable: d["status"] = "deletable"; break;
        case DeletabilityStatus::not_deletable: d["status"] = "not_deletable"; break;
        case DeletabilityStatus::unknown_budget: d["status"] = "unknown_budget"; break;
    }
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    d["checked_assignments"] = big_to_py(v.checked_assignments);
    return d;
}

py::dict deletion_dict(const SubgraphDeletion& del) {
    py::dict d;
    if (del.edge) d["edge"] = py::make_tuple(del.edge->first, del.edge->second);
    if (del.vertex) d["vertex"] = *del.vertex;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact counting and construction of correspondence colourings";

    py::register_exception<TheoremFalsified>(m, "TheoremFalsifiedError",
                                             PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError",
                                           PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "InputParseError", PyExc_ValueError);

    // --- graphs ---------------------------------------------------------

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::vector<int>, std::vector<Edge>>(), py::arg("vertices"),
             py::arg("edges"))
        .def_static("from_edges", &Graph::from_edges)
        .def_static("from_graph6", &Graph::from_graph6)
        .def("to_graph6", &Graph::to_graph6)
        .def_property_readonly("vertices",
                               [](const Graph& g) { return g.vertices(); })
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("has_vertex", &Graph::has_vertex)
        .def("has_edge", &Graph::has_edge)
        .def("neighbours", &Graph::neighbours)
        .def("degree", &Graph::degree)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(v=" + std::to_string(g.vertex_count()) +
                   ", e=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("wheel_graph", &wheel_graph);
    m.def("complete_graph", &complete_graph);
    m.def("grid_graph", &grid_graph);
    m.def("icosahedron_graph", &icosahedron_graph);
    m.def("dodecahedron_graph", &dodecahedron_graph);

    // Girth values: an int, or None for acyclic inputs.
    auto girth_obj = [](const GirthValue& v) {
        return v.is_infinite() ? py::object(py::none())
                               : py::object(py::int_(v.value()));
    };
    m.def("girth", [girth_obj](const Graph& g) { return girth_obj(girth(g)); });
    m.def("edge_girth", [girth_obj](const Graph& g, int u, int v) {
        return girth_obj(edge_girth(g, make_edge(u, v)));
    });
    m.def("vertex_girth", [girth_obj](const Graph& g, int v) {
        return girth_obj(vertex_girth(g, v));
    });

    py::class_<SubgraphRef>(m, "SubgraphRef")
        .def_static("induced", &SubgraphRef::induced)
        .def_static("of", &SubgraphRef::of)
        .def_static("whole", &SubgraphRef::whole)
        .def("materialize", &SubgraphRef::materialize)
        .def_property_readonly(
            "vertices", [](const SubgraphRef& s) { return s.vertex_subset(); })
        .def_property_readonly("edges",
                               [](const SubgraphRef& s) { return s.edge_subset(); })
        .def("vertex_count", &SubgraphRef::vertex_count)
        .def("edge_count", &SubgraphRef::edge_count);

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def(py::init<Graph, std::map<int, std::vector<int>>, std::vector<int>>(),
             py::arg("graph"), py::arg("rotation"), py::arg("outer_face"))
        .def_property_readonly("graph",
                               [](const PlaneGraph& pg) { return pg.graph(); })
        .def_property_readonly("rotation",
                               [](const PlaneGraph& pg) { return pg.rotation(); })
        .def("face_count",
             [](const PlaneGraph& pg) { return pg.faces().size(); })
        .def("face_walks",
             [](const PlaneGraph& pg) {
                 std::vector<std::vector<int>> walks;
                 for (const Face& f : pg.faces()) walks.push_back(f.walk);
                 return walks;
             })
        .def("outer_walk",
             [](const PlaneGraph& pg) { return pg.outer_face().walk; })
        .def("outer_vertices", &PlaneGraph::outer_vertices)
        .def("interior_vertices", &PlaneGraph::interior_vertices);

    m.def("plane_cycle", &plane_cycle);
    m.def("plane_path", &plane_path);
    m.def("plane_wheel", &plane_wheel);
    m.def("plane_complete", &plane_complete);
    m.def("plane_grid", &plane_grid);
    m.def("plane_icosahedron", &plane_icosahedron);
    m.def("plane_dodecahedron", &plane_dodecahedron);

    // --- assignments ------------------------------------------------------

    py::class_<CorrespondenceAssignment>(m, "Assignment")
        .def(py::init<std::map<int, std::vector<Colour>>,
                      std::map<Edge, std::vector<ColourPair>>, std::optional<int>>(),
             py::arg("lists"),
             py::arg("matchings") = std::map<Edge, std::vector<ColourPair>>{},
             py::arg("k") = std::nullopt)
        .def_property_readonly(
            "lists", [](const CorrespondenceAssignment& a) { return a.lists(); })
        .def_property_readonly(
            "matchings",
            [](const CorrespondenceAssignment& a) { return a.matchings(); })
        .def_property_readonly(
            "k", [](const CorrespondenceAssignment& a) { return a.declared_k(); });

    m.def("from_lists", &from_lists, py::arg("graph"), py::arg("lists"),
          "identity matchings on the shared colours of every edge");
    m.def(
        "identity_assignment",
        [](const Graph& g, int k) {
            std::vector<Colour> colours(static_cast<std::size_t>(k));
            std::iota(colours.begin(), colours.end(), 0);
            std::map<int, std::vector<Colour>> lists;
            for (int v : g.vertices()) lists[v] = colours;
            CorrespondenceAssignment a = from_lists(g, lists);
            return CorrespondenceAssignment(a.lists(), a.matchings(), k);
        },
        py::arg("graph"), py::arg("k"));
    m.def("local_girth_lists",
          py::overload_cast<const Graph&>(&local_girth_lists));
    m.def(
        "validate",
        [](const Graph& g, const CorrespondenceAssignment& a) {
            std::vector<std::string> out;
            for (const Violation& v : validate(g, a)) out.push_back(v.detail);
            return out;
        },
        "human-readable violation list; empty means clean");
    m.def("is_valid_colouring", &is_valid_colouring);

    py::class_<PermutationAssignments>(m, "PermutationAssignments")
        .def(py::init<const Graph&, int>(), py::arg("graph"), py::arg("k"))
        .def("total",
             [](const PermutationAssignments& p) { return big_to_py(p.total()); })
        .def("at",
             [](const PermutationAssignments& p, const py::object& index) {
                 return p.at(big_from_py(index));
             })
        .def("sample",
             [](const PermutationAssignments& p, std::uint64_t seed) {
                 std::mt19937_64 rng(seed);
                 return p.sample(rng);
             },
             py::arg("seed"));

    m.def(
        "precolouring_gadget",
        [](const Graph& g, const SubgraphRef& h, int r,
           const std::optional<CorrespondenceAssignment>& base) {
            return precolouring_gadget(g, h, r, base);
        },
        py::arg("graph"), py::arg("h"), py::arg("r"),
        py::arg("base") = std::nullopt);

    // --- counting ----------------------------------------------------------

    m.def(
        "count_colourings",
        [](const Graph& g, const CorrespondenceAssignment& a,
           std::uint64_t budget) {
            return count_result_dict(count_colourings(g, a, budget));
        },
        py::arg("graph"), py::arg("assignment"),
        py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "count_extensions",
        [](const Graph& g, const CorrespondenceAssignment& a, const SubgraphRef& s,
           const PartialColouring& phi, std::uint64_t budget) {
            return count_result_dict(count_extensions(g, a, s, phi, budget));
        },
        py::arg("graph"), py::arg("assignment"), py::arg("s"), py::arg("phi"),
        py::arg("budget") = kDefaultNodeBudget);
    m.def("enumerate_colourings",
          [](const Graph& g, const CorrespondenceAssignment& a, std::uint64_t cap,
             std::uint64_t budget) { return enumerate_colourings(g, a, cap, budget); },
          py::arg("graph"), py::arg("assignment"), py::arg("cap") = 0,
          py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "has_at_least",
        [](const Graph& g, const CorrespondenceAssignment& a, const py::object& n,
           std::uint64_t budget) { return has_at_least(g, a, big_from_py(n), budget); },
        py::arg("graph"), py::arg("assignment"), py::arg("n"),
        py::arg("budget") = kDefaultNodeBudget);
    m.def("find_extension", &find_extension, py::arg("graph"),
          py::arg("assignment"), py::arg("phi"),
          py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "min_count_over_permutations",
        [](const Graph& g, int k, std::uint64_t space_budget,
           std::uint64_t node_budget) {
            MinPermResult r = min_count_over_permutations(g, k, space_budget,
                                                          node_budget);
            py::dict d;
            d["minimum"] = count_result_dict(r.minimum);
            d["witness"] = py::cast(r.witness);
            d["assignments_checked"] = big_to_py(r.assignments_checked);
            return d;
        },
        py::arg("graph"), py::arg("k"),
        py::arg("space_budget") = PermutationAssignments::default_budget,
        py::arg("node_budget") = kDefaultNodeBudget);

    // --- extension -----------------------------------------------------------

    m.def("extend_5cc", &extend_5cc, py::arg("plane_graph"), py::arg("assignment"),
          py::arg("s"), py::arg("phi"), py::arg("budget") = kDefaultNodeBudget);
    m.def("extend_3cc_girth5", &extend_3cc_girth5, py::arg("plane_graph"),
          py::arg("assignment"), py::arg("s"), py::arg("independent2"),
          py::arg("phi"), py::arg("budget") = kDefaultNodeBudget);
    m.def("check_deletable_via_extension", &check_deletable_via_extension,
          py::arg("plane_graph"), py::arg("h"), py::arg("r"), py::arg("challenge"),
          py::arg("budget") = kDefaultNodeBudget);

    // --- structure ---------------------------------------------------------

    m.def(
        "deficiency",
        [](const Graph& g, const SubgraphRef& h, int g_param,
           const std::optional<py::object>& epsilon) {
            std::optional<Rational> eps;
            if (epsilon) eps = rat_from_py(*epsilon);
            DeficiencyReport rep = deficiency(g, h, g_param, eps);
            py::dict d;
            d["g_param"] = rep.g_param;
            d["v_diff"] = rep.v_diff;
            d["e_diff"] = rep.e_diff;
            d["def"] = rep.def_g;
            d["epsilon"] = rat_to_py(rep.epsilon);
            d["d_sign"] = rep.d_scaled_sign;
            return d;
        },
        py::arg("graph"), py::arg("h"), py::arg("g_param"),
        py::arg("epsilon") = std::nullopt);
    m.def(
        "d_ge_check",
        [](const Graph& g, const SubgraphRef& h, int g_param,
           const py::object& epsilon, const py::object& threshold) {
            return d_ge_check(g, h, g_param, rat_from_py(epsilon),
                              rat_from_py(threshold));
        },
        py::arg("graph"), py::arg("h"), py::arg("g_param"), py::arg("epsilon"),
        py::arg("threshold"));
    m.def(
        "is_deletable",
        [](const Graph& g, const SubgraphRef& h, int r,
           const py::object& assignment_budget, std::uint64_t node_budget,
           std::uint64_t samples, std::uint64_t seed) {
            return verdict_dict(is_deletable(g, h, r,
                                             big_from_py(assignment_budget),
                                             node_budget, samples, seed));
        },
        py::arg("graph"), py::arg("h"), py::arg("r"),
        py::arg("assignment_budget") = py::int_(1000000),
        py::arg("node_budget") = kDefaultNodeBudget, py::arg("samples") = 256,
        py::arg("seed") = 1);
    m.def(
        "is_exponentially_deletable",
        [](const Graph& g, const SubgraphRef& h, int r, const py::object& epsilon,
           const py::object& assignment_budget, std::uint64_t node_budget,
           std::uint64_t samples, std::uint64_t seed) {
            return verdict_dict(is_exponentially_deletable(
                g, h, r, rat_from_py(epsilon), big_from_py(assignment_budget),
                node_budget, samples, seed));
        },
        py::arg("graph"), py::arg("h"), py::arg("r"), py::arg("epsilon"),
        py::arg("assignment_budget") = py::int_(1000000),
        py::arg("node_budget") = kDefaultNodeBudget, py::arg("samples") = 256,
        py::arg("seed") = 1);
    m.def(
        "is_critical",
        [](const Graph& g, const SubgraphRef& s, const CorrespondenceAssignment& a,
           const py::object& colouring_budget, std::uint64_t node_budget) {
            CriticalityResult res =
                is_critical(g, s, a, big_from_py(colouring_budget), node_budget);
            py::dict d;
            d["critical"] = res.critical;
            py::list cert;
            for (const CriticalCertificateEntry& e : res.certificate) {
                py::dict entry;
                entry["removed"] = deletion_dict(e.removed);
                entry["phi"] = py::cast(e.phi);
                cert.append(entry);
            }
            d["certificate"] = cert;
            d["failing"] = res.failing ? py::object(deletion_dict(*res.failing))
                                       : py::object(py::none());
            return d;
        },
        py::arg("graph"), py::arg("s"), py::arg("assignment"),
        py::arg("colouring_budget") = py::int_(1000000),
        py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "deletable_subgraph_search",
        [](const Graph& g, const SubgraphRef& h, int r,
           const py::object& assignment_budget, std::uint64_t node_budget) {
            DeletableSearchResult res = deletable_subgraph_search(
                g, h, r, big_from_py(assignment_budget), node_budget);
            py::dict d;
            d["x"] = res.x ? py::cast(*res.x) : py::object(py::none());
            d["exhaustive"] = res.exhaustive;
            d["checked_assignments"] = big_to_py(res.checked_assignments);
            return d;
        },
        py::arg("graph"), py::arg("h"), py::arg("r"),
        py::arg("assignment_budget") = py::int_(1000000),
        py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "cheeger_disk_check",
        [](const PlaneGraph& pg, const std::vector<int>& boundary,
           const py::object& c) {
            CheegerVerdict v = cheeger_disk_check(pg, boundary, rat_from_py(c));
            py::dict d;
            d["holds"] = v.holds;
            d["vacuous"] = v.vacuous;
            d["interior"] = v.interior_count;
            d["boundary"] = v.boundary_count;
            d["c"] = rat_to_py(v.c);
            return d;
        },
        py::arg("plane_graph"), py::arg("boundary"), py::arg("c"));

    // --- bounds ------------------------------------------------------------

    m.def("thm_planar_5cc_bound",
          [](int v) { return rat_to_py(thm_planar_5cc_bound(v)); });
    m.def("thm_planar_3cc_girth5_bound",
          [](int v) { return rat_to_py(thm_planar_3cc_girth5_bound(v)); });
    m.def("thm_extension_5cc_bound",
          [](const Graph& g, const SubgraphRef& s) {
              return rat_to_py(thm_extension_5cc_bound(g, s));
          });
    m.def("thm_extension_3cc_bound",
          [](const Graph& g, const SubgraphRef& s) {
              return rat_to_py(thm_extension_3cc_bound(g, s));
          });
    m.def("local_girth_bound",
          [](int v) { return rat_to_py(local_girth_bound(v)); });
    m.def("birkhoff_lewis_bound",
          [](int v) { return big_to_py(birkhoff_lewis_bound(v)); });
    m.def("euler_girth_slack", [](const Graph& g) {
        return rat_to_py(euler_girth_slack(g));
    });
    m.def(
        "alon_furedi_threshold",
        [](const Graph& g, const CorrespondenceAssignment& a, int t) {
            AlonFurediParams p = alon_furedi_params(g, a, t);
            BoundThreshold thr = alon_furedi(p.s_sum, p.n, p.d, p.t);
            py::dict d;
            d["base"] = big_to_py(thr.base);
            d["exponent"] = rat_to_py(thr.exponent);
            return d;
        },
        py::arg("graph"), py::arg("assignment"), py::arg("t"));
    m.def(
        "count_meets_bound",
        [](const py::object& count, const py::object& base,
           const py::object& exponent) {
            CountResult r;
            r.count = big_from_py(count);
            BoundThreshold thr{"bound", big_from_py(base), rat_from_py(exponent)};
            return verify_bound(r, thr).holds;
        },
        py::arg("count"), py::arg("base"), py::arg("exponent"),
        "exact decision of count >= base**exponent via cross-powers");

    // --- CLI in-process ------------------------------------------------------

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv;
            argv.push_back("corrcount");
            for (const std::string& a : args) argv.push_back(a.c_str());
            return io::run_cli(static_cast<int>(argv.size()), argv.data());
        },
        py::arg("args"), "run a CLI invocation in-process; returns the exit code");
}
