#include "corrcount/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

namespace corrcount::io {

namespace {

using nlohmann::json;

// --- small parsers ----------------------------------------------------------

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError(what + ": trailing characters in '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(what + ": expected an integer, got '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() || !s.empty()) out.push_back(cur);
    return out;
}

// "0,1,2" -> {0,1,2}; empty string -> {}.
std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ','))
        out.push_back(parse_int(tok, "vertex list"));
    return out;
}

// "0-1,2-3" -> {{0,1},{2,3}}; empty -> {}.
std::vector<Edge> parse_edge_list(const std::string& s) {
    std::vector<Edge> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ',')) {
        auto parts = split(tok, '-');
        if (parts.size() != 2)
            throw ParseError("edge list: expected 'u-v', got '" + tok + "'");
        out.push_back(make_edge(parse_int(parts[0], "edge list"),
                                parse_int(parts[1], "edge list")));
    }
    return out;
}

// "0=1,3=2" -> {0:1, 3:2}; empty -> {}.
PartialColouring parse_phi(const std::string& s) {
    PartialColouring phi;
    if (s.empty()) return phi;
    for (const std::string& tok : split(s, ',')) {
        auto parts = split(tok, '=');
        if (parts.size() != 2)
            throw ParseError("colouring: expected 'vertex=colour', got '" + tok + "'");
        int v = parse_int(parts[0], "colouring");
        int c = parse_int(parts[1], "colouring");
        if (phi.count(v)) throw ParseError("colouring: vertex " + parts[0] + " repeated");
        phi[v] = c;
    }
    return phi;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<Graph> parse_graph6_lines(const std::string& text, const std::string& path) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty() || line[0] == '>') continue;  // '>' lines are headers
        try {
            out.push_back(Graph::from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

// A stable identifier for report rows: graph6 when the ids allow it.
std::string graph_id(const Graph& g, int index) {
    try {
        return g.to_graph6();
    } catch (const PreconditionViolation&) {
        return "graph#" + std::to_string(index);
    }
}

json int_or_string(const BigInt& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

}  // namespace

// --- manifest ---------------------------------------------------------------

json manifest_json(const RunManifest& m) {
    json params = json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    json out = json::object();
    out["command"] = m.command;
    out["inputs"] = m.inputs;
    out["parameters"] = params;
    out["output"] = m.output_path.empty() ? "-" : m.output_path;
    out["format"] = m.format;
    return out;
}

// --- graphs -------------------------------------------------------------------

Graph graph_from_token(const std::string& token) {
    if (token == "icosahedron") return icosahedron_graph();
    if (token == "dodecahedron") return dodecahedron_graph();
    if (token.rfind("grid", 0) == 0) {
        auto dims = split(token.substr(4), 'x');
        if (dims.size() == 2 && all_digits(dims[0]) && all_digits(dims[1]))
            return grid_graph(parse_int(dims[0], "grid"), parse_int(dims[1], "grid"));
    }
    if (token.size() >= 2 && all_digits(token.substr(1))) {
        int n = parse_int(token.substr(1), "family size");
        switch (token[0]) {
            case 'c': return cycle_graph(n);
            case 'p': return path_graph(n);
            case 'w': return wheel_graph(n);
            case 'k': return complete_graph(n);
            default: break;
        }
    }
    try {
        return Graph::from_graph6(token);
    } catch (const ParseError& e) {
        throw ParseError("graph token '" + token + "': " + e.what());
    }
}

PlaneGraph plane_from_token(const std::string& token) {
    if (token == "icosahedron") return plane_icosahedron();
    if (token == "dodecahedron") return plane_dodecahedron();
    if (token.rfind("grid", 0) == 0) {
        auto dims = split(token.substr(4), 'x');
        if (dims.size() == 2 && all_digits(dims[0]) && all_digits(dims[1]))
            return plane_grid(parse_int(dims[0], "grid"), parse_int(dims[1], "grid"));
    }
    if (token.size() >= 2 && all_digits(token.substr(1))) {
        int n = parse_int(token.substr(1), "family size");
        switch (token[0]) {
            case 'c': return plane_cycle(n);
            case 'p': return plane_path(n);
            case 'w': return plane_wheel(n);
            case 'k': return plane_complete(n);
            default: break;
        }
    }
    throw ParseError("plane graphs need a named family token (c5, p4, w5, k4, "
                     "grid2x3, icosahedron, dodecahedron) or a JSON embedding file; "
                     "got '" + token + "'");
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    return parse_graph6_lines(read_file(path), path);
}

std::string emit_graph6(const std::vector<Graph>& graphs) {
    std::string out;
    for (const Graph& g : graphs) {
        out += g.to_graph6();
        out += '\n';
    }
    return out;
}

// --- embeddings -----------------------------------------------------------------

PlaneGraph embedding_from_json(const json& j) {
    try {
        std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("embedding: edge entries must be [u, v] pairs");
            edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        }
        std::map<int, std::vector<int>> rotation;
        for (const auto& [key, val] : j.at("rotation").items())
            rotation[parse_int(key, "embedding rotation key")] =
                val.get<std::vector<int>>();
        std::vector<int> outer = j.at("outer_face").get<std::vector<int>>();
        return PlaneGraph(Graph(std::move(vertices), std::move(edges)),
                          std::move(rotation), std::move(outer));
    } catch (const json::exception& e) {
        throw ParseError(std::string("embedding: ") + e.what());
    }
}

json embedding_to_json(const PlaneGraph& pg) {
    json out = json::object();
    out["vertices"] = pg.graph().vertices();
    json edges = json::array();
    for (const Edge& e : pg.graph().edges())
        edges.push_back(json::array({e.first, e.second}));
    out["edges"] = edges;
    json rot = json::object();
    for (const auto& [v, around] : pg.rotation()) rot[std::to_string(v)] = around;
    out["rotation"] = rot;
    out["outer_face"] = pg.outer_face().walk;
    return out;
}

// --- assignments -----------------------------------------------------------------

CorrespondenceAssignment AssignmentSpec::realize(const Graph& g) const {
    if (identity_mode) {
        CorrespondenceAssignment a = from_lists(g, lists);
        if (declared_k)
            return CorrespondenceAssignment(a.lists(), a.matchings(), declared_k);
        return a;
    }
    return CorrespondenceAssignment(lists, matchings, declared_k);
}

AssignmentSpec assignment_from_json(const json& j) {
    try {
        AssignmentSpec spec;
        std::string mode = j.value("mode", std::string("explicit"));
        if (mode == "identity")
            spec.identity_mode = true;
        else if (mode != "explicit")
            throw ParseError("assignment: mode must be \"identity\" or \"explicit\", got \"" +
                             mode + "\"");
        for (const auto& [key, val] : j.at("lists").items())
            spec.lists[parse_int(key, "assignment list key")] =
                val.get<std::vector<int>>();
        if (j.contains("matchings")) {
            if (spec.identity_mode)
                throw ParseError("assignment: identity mode derives its matchings; "
                                 "explicit \"matchings\" are not allowed");
            for (const auto& m : j.at("matchings")) {
                const auto& ej = m.at("edge");
                if (!ej.is_array() || ej.size() != 2)
                    throw ParseError("assignment: matching edges must be [u, v] pairs");
                Edge e = make_edge(ej.at(0).get<int>(), ej.at(1).get<int>());
                std::vector<ColourPair> pairs;
                for (const auto& p : m.at("pairs")) {
                    if (!p.is_array() || p.size() != 2)
                        throw ParseError("assignment: matching pairs must be [a, b]");
                    pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
                }
                if (spec.matchings.count(e))
                    throw ParseError("assignment: duplicate matching for edge " +
                                     std::to_string(e.first) + "-" +
                                     std::to_string(e.second));
                spec.matchings[e] = std::move(pairs);
            }
        }
        if (j.contains("k")) spec.declared_k = j.at("k").get<int>();
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("assignment: ") + e.what());
    }
}

json assignment_to_json(const CorrespondenceAssignment& a) {
    json lists = json::object();
    for (const auto& [v, l] : a.lists()) lists[std::to_string(v)] = l;
    json matchings = json::array();
    for (const auto& [e, pairs] : a.matchings()) {
        json row = json::object();
        row["edge"] = json::array({e.first, e.second});
        json pj = json::array();
        for (const auto& [x, y] : pairs) pj.push_back(json::array({x, y}));
        row["pairs"] = pj;
        matchings.push_back(row);
    }
    json out = json::object();
    out["mode"] = "explicit";
    out["lists"] = lists;
    out["matchings"] = matchings;
    if (a.declared_k()) out["k"] = *a.declared_k();
    return out;
}

// --- scalars ------------------------------------------------------------------------

json rational_json(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    json out = json::object();
    out["num"] = int_or_string(BigInt(c.get_num()));
    out["den"] = int_or_string(BigInt(c.get_den()));
    return out;
}

Rational rational_from_json(const json& j) {
    auto piece = [](const json& f, const char* what) -> BigInt {
        if (f.is_number_integer()) return BigInt(f.get<long>());
        if (f.is_string()) {
            try {
                return BigInt(f.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw ParseError(std::string("rational: bad ") + what);
            }
        }
        throw ParseError(std::string("rational: ") + what +
                         " must be an integer or a decimal string");
    };
    try {
        BigInt num = piece(j.at("num"), "numerator");
        BigInt den = piece(j.at("den"), "denominator");
        if (den == 0) throw ParseError("rational: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("rational: ") + e.what());
    }
}

json count_result_json(const CountResult& r) {
    json out = json::object();
    out["count"] = r.count.get_str();
    out["explored_nodes"] = r.explored_nodes;
    out["truncated"] = r.truncated;
    return out;
}

json bound_verdict_json(const BoundVerdict& v) {
    json out = json::object();
    out["bound_name"] = v.bound_name;
    out["exponent_num"] = int_or_string(v.exponent_num);
    out["exponent_den"] = int_or_string(v.exponent_den);
    out["count"] = v.oracle_count.get_str();
    out["holds"] = v.holds;
    out["comparison_method"] = v.comparison_method;
    return out;
}

std::string bound_verdict_csv_row(const std::string& gid, const BoundVerdict& v) {
    return gid + "," + v.bound_name + "," + v.oracle_count.get_str() + "," +
           (v.holds ? "true" : "false");
}

// --- bundle ingestion ------------------------------------------------------------------

IngestResult ingest(const std::string& path) {
    std::string text = read_file(path);
    IngestResult res;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        auto classify = [&res](const json& j, const std::string& where) {
            if (!j.is_object())
                throw ParseError(where + ": expected a JSON object");
            if (j.contains("rotation")) {
                try {
                    res.embeddings.push_back(embedding_from_json(j));
                } catch (const PreconditionViolation& e) {
                    throw ParseError(where + ": embedding rejected: " + e.what());
                } catch (const ParseError& e) {
                    throw ParseError(where + ": " + e.what());
                }
            } else if (j.contains("lists")) {
                try {
                    res.assignments.push_back(assignment_from_json(j));
                } catch (const PreconditionViolation& e) {
                    throw ParseError(where + ": assignment rejected: " + e.what());
                } catch (const ParseError& e) {
                    throw ParseError(where + ": " + e.what());
                }
            } else {
                throw ParseError(where + ": unrecognized document (embeddings carry "
                                 "\"rotation\", assignments carry \"lists\")");
            }
        };
        if (doc.is_array()) {
            int idx = 0;
            for (const auto& el : doc)
                classify(el, path + "[" + std::to_string(idx++) + "]");
        } else {
            classify(doc, path);
        }
    } else {
        res.graphs = parse_graph6_lines(text, path);
    }
    return res;
}

// --- CLI -----------------------------------------------------------------------------------

namespace {

// A user error that should exit with the usage code rather than a parse code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::uint64_t budget = kDefaultNodeBudget;
    std::uint64_t assignment_budget = 1'000'000;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out_path;
};

struct CommandOpts {
    std::vector<std::string> graphs;      // --graph tokens
    std::vector<std::string> inputs;      // --input files
    std::vector<std::string> planes;      // --plane tokens
    std::vector<std::string> embeddings;  // --embedding files
    std::string assignment = "identity";  // identity | random | file path
    int k = 0;                            // 0 = unset
    unsigned samples = 1;
    std::string bound;
    std::string mode;
    std::string subgraph;        // vertex list
    std::string subgraph_edges;  // edge list (explicit, else induced)
    std::string s_walk;          // precoloured walk for extend
    std::string phi;
    std::string independent2;
    int r = 0;
    int t = 2;
    int gparam = 3;
    std::string epsilon;    // rational text
    std::string threshold;  // rational text
    std::string edge;       // for girth
    int vertex = -1;        // for girth
};

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError(out_path + ": cannot open output file");
    f << text;
}

std::string dump_doc(const json& j) { return j.dump(2) + "\n"; }

// Graphs from --graph tokens then --input files, in input order.
std::vector<Graph> collect_graphs(const CommandOpts& c) {
    std::vector<Graph> out;
    for (const std::string& tok : c.graphs) out.push_back(graph_from_token(tok));
    for (const std::string& path : c.inputs) {
        IngestResult r = ingest(path);
        for (Graph& g : r.graphs) out.push_back(std::move(g));
    }
    return out;
}

// Embeddings from --plane tokens, --embedding files, then --input files.
std::vector<PlaneGraph> collect_embeddings(const CommandOpts& c) {
    std::vector<PlaneGraph> out;
    for (const std::string& tok : c.planes) out.push_back(plane_from_token(tok));
    std::vector<std::string> files = c.embeddings;
    files.insert(files.end(), c.inputs.begin(), c.inputs.end());
    for (const std::string& path : files) {
        IngestResult r = ingest(path);
        for (PlaneGraph& pg : r.embeddings) out.push_back(std::move(pg));
    }
    return out;
}

SubgraphRef subgraph_from_opts(const Graph& g, const CommandOpts& c) {
    std::vector<int> verts = parse_vertex_list(c.subgraph);
    if (!c.subgraph_edges.empty())
        return SubgraphRef::of(g, verts, parse_edge_list(c.subgraph_edges));
    return SubgraphRef::induced(g, verts);
}

// The precoloured walk for extend: consecutive vertices are edges; a walk that
// returns to its first vertex closes into a cycle.
SubgraphRef walk_subgraph(const Graph& g, const std::string& walk_text) {
    std::vector<int> walk = parse_vertex_list(walk_text);
    bool closed = walk.size() >= 4 && walk.front() == walk.back();
    if (closed) walk.pop_back();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        edges.push_back(make_edge(walk[i], walk[i + 1]));
    if (closed) edges.push_back(make_edge(walk.back(), walk.front()));
    std::vector<int> verts = walk;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw ParseError("precoloured walk repeats a vertex");
    std::sort(edges.begin(), edges.end());
    return SubgraphRef::of(g, verts, edges);
}

CorrespondenceAssignment identity_assignment(const Graph& g, int k) {
    std::vector<Colour> colours(static_cast<std::size_t>(k));
    std::iota(colours.begin(), colours.end(), 0);
    std::map<int, std::vector<Colour>> lists;
    for (int v : g.vertices()) lists[v] = colours;
    CorrespondenceAssignment a = from_lists(g, lists);
    return CorrespondenceAssignment(a.lists(), a.matchings(), k);
}

// Labelled assignments for one graph: identity -> one; random -> `samples`
// seeded draws; a file -> every assignment spec it contains.
std::vector<std::pair<std::string, CorrespondenceAssignment>> realize_assignments(
    const CommandOpts& c, const Graph& g, std::mt19937_64& rng) {
    std::vector<std::pair<std::string, CorrespondenceAssignment>> out;
    if (c.assignment == "identity") {
        if (c.k < 1)
            throw UsageError("--k is required with the identity assignment");
        out.emplace_back("identity", identity_assignment(g, c.k));
    } else if (c.assignment == "random") {
        if (c.k < 1) throw UsageError("--k is required with random assignments");
        PermutationAssignments space(g, c.k);
        for (unsigned i = 0; i < c.samples; ++i)
            out.emplace_back("random[" + std::to_string(i) + "]", space.sample(rng));
    } else {
        IngestResult r = ingest(c.assignment);
        if (r.assignments.empty())
            throw ParseError(c.assignment + ": no assignments found");
        for (std::size_t i = 0; i < r.assignments.size(); ++i)
            out.emplace_back("file[" + std::to_string(i) + "]",
                             r.assignments[i].realize(g));
    }
    return out;
}

RunManifest make_manifest(const std::string& command, const CommandOpts& c,
                          const GlobalOpts& g) {
    RunManifest m;
    m.command = command;
    for (const std::string& t : c.graphs) m.inputs.push_back("graph:" + t);
    for (const std::string& t : c.planes) m.inputs.push_back("plane:" + t);
    for (const std::string& t : c.embeddings) m.inputs.push_back("embedding:" + t);
    for (const std::string& t : c.inputs) m.inputs.push_back("file:" + t);
    m.parameters["budget"] = std::to_string(g.budget);
    m.parameters["assignment_budget"] = std::to_string(g.assignment_budget);
    m.parameters["seed"] = std::to_string(g.seed);
    auto put = [&m](const char* key, const std::string& val) {
        if (!val.empty()) m.parameters[key] = val;
    };
    put("assignment", c.assignment);
    if (c.k > 0) m.parameters["k"] = std::to_string(c.k);
    if (c.samples != 1) m.parameters["samples"] = std::to_string(c.samples);
    put("bound", c.bound);
    put("mode", c.mode);
    put("subgraph", c.subgraph);
    put("subgraph_edges", c.subgraph_edges);
    put("s", c.s_walk);
    put("phi", c.phi);
    put("independent2", c.independent2);
    if (c.r > 0) m.parameters["r"] = std::to_string(c.r);
    if (c.bound == "alonfuredi") m.parameters["t"] = std::to_string(c.t);
    put("epsilon", c.epsilon);
    put("threshold", c.threshold);
    put("edge", c.edge);
    if (c.vertex >= 0) m.parameters["vertex"] = std::to_string(c.vertex);
    m.output_path = g.out_path;
    m.format = g.format;
    return m;
}

// ---- count -----------------------------------------------------------------

int cmd_count(const CommandOpts& c, const GlobalOpts& g) {
    std::vector<Graph> graphs = collect_graphs(c);
    if (graphs.empty()) throw UsageError("count needs --graph or --input");
    std::mt19937_64 rng(g.seed);
    bool extensions = !c.subgraph.empty() || !c.phi.empty();

    json rows = json::array();
    std::string csv = "graph_id,assignment,count,explored_nodes,truncated\n";
    bool any_truncated = false;
    int index = 0;
    for (const Graph& graph : graphs) {
        std::string gid = graph_id(graph, index++);
        for (const auto& [label, a] : realize_assignments(c, graph, rng)) {
            CountResult r;
            if (extensions) {
                SubgraphRef s = subgraph_from_opts(graph, c);
                r = count_extensions(graph, a, s, parse_phi(c.phi), g.budget);
            } else {
                r = count_colourings(graph, a, g.budget);
            }
            any_truncated = any_truncated || r.truncated;
            json row = json::object();
            row["graph"] = gid;
            row["assignment"] = label;
            row["result"] = count_result_json(r);
            rows.push_back(row);
            csv += gid + "," + label + "," + r.count.get_str() + "," +
                   std::to_string(r.explored_nodes) + "," +
                   (r.truncated ? "true" : "false") + "\n";
        }
    }

    RunManifest man = make_manifest("count", c, g);
    if (g.format == "csv") {
        write_output(csv, g.out_path);
    } else {
        json doc = json::object();
        doc["manifest"] = manifest_json(man);
        doc["results"] = rows;
        write_output(dump_doc(doc), g.out_path);
    }
    return any_truncated ? kExitBudget : kExitOk;
}

// ---- verify ----------------------------------------------------------------

const std::set<std::string>& known_bounds() {
    static const std::set<std::string> bounds = {
        "thm1.6",  "thm1.10",    "thm3.2",   "thm4.5",    "alonfuredi",
        "birkhoff", "localgirth", "prop6.3",  "cheeger52", "cheeger270"};
    return bounds;
}

int default_k_for_bound(const std::string& bound) {
    if (bound == "thm1.6" || bound == "thm3.2" || bound == "birkhoff") return 5;
    if (bound == "thm1.10" || bound == "thm4.5") return 3;
    return 0;  // no natural default
}

void require_girth_at_least_5(const Graph& g, const std::string& bound) {
    if (girth(g) < GirthValue::finite(5))
        throw PreconditionViolation(bound + " requires girth at least 5; graph has girth " +
                                    girth(g).to_string());
}

int cmd_verify(const CommandOpts& c_in, const GlobalOpts& g) {
    CommandOpts c = c_in;
    if (!known_bounds().count(c.bound)) {
        std::string all;
        for (const std::string& b : known_bounds()) all += (all.empty() ? "" : ", ") + b;
        throw UsageError("unknown bound '" + c.bound + "' (known: " + all + ")");
    }
    if (c.k == 0) c.k = default_k_for_bound(c.bound);

    json rows = json::array();
    std::string csv = "graph_id,bound_name,count,holds\n";
    bool any_fail = false;
    bool any_undecided = false;

    if (c.bound == "cheeger52" || c.bound == "cheeger270") {
        std::vector<PlaneGraph> embeddings = collect_embeddings(c);
        if (embeddings.empty())
            throw UsageError(c.bound + " needs --plane or --embedding inputs");
        Rational cc(c.bound == "cheeger52" ? 52 : 270);
        int index = 0;
        for (const PlaneGraph& pg : embeddings) {
            std::string gid = graph_id(pg.graph(), index++);
            CheegerVerdict v = cheeger_disk_check(pg, pg.outer_vertices(), cc);
            any_fail = any_fail || !v.holds;
            json row = json::object();
            row["graph"] = gid;
            row["bound_name"] = c.bound;
            row["holds"] = v.holds;
            row["vacuous"] = v.vacuous;
            row["interior"] = v.interior_count;
            row["boundary"] = v.boundary_count;
            row["c"] = rational_json(v.c);
            rows.push_back(row);
            csv += gid + "," + c.bound + "," + std::to_string(v.interior_count) +
                   "," + (v.holds ? "true" : "false") + "\n";
        }
    } else if (c.bound == "prop6.3") {
        std::vector<Graph> graphs = collect_graphs(c);
        if (graphs.empty()) throw UsageError("verify needs --graph or --input");
        int index = 0;
        for (const Graph& graph : graphs) {
            std::string gid = graph_id(graph, index++);
            json row = json::object();
            row["graph"] = gid;
            row["bound_name"] = c.bound;
            // Hypothesis-violating graphs (forests) are skipped, not failed:
            // the inequality only claims anything for graphs with a cycle.
            try {
                Rational slack = euler_girth_slack(graph);
                bool holds = slack >= 2;
                any_fail = any_fail || !holds;
                row["slack"] = rational_json(slack);
                row["holds"] = holds;
                row["comparison_method"] = "rational-compare";
                csv += gid + "," + c.bound + "," + rational_to_string(slack) + "," +
                       (holds ? "true" : "false") + "\n";
            } catch (const PreconditionViolation& e) {
                row["skipped"] = e.what();
                csv += gid + "," + c.bound + ",," + "skipped\n";
            }
            rows.push_back(row);
        }
    } else {
        std::vector<Graph> graphs = collect_graphs(c);
        if (graphs.empty()) throw UsageError("verify needs --graph or --input");
        std::mt19937_64 rng(g.seed);
        int index = 0;
        for (const Graph& graph : graphs) {
            std::string gid = graph_id(graph, index++);
            // Corpus runs skip graphs that violate a bound's hypothesis
            // instead of aborting; the skip is recorded in the row.
            std::string skip_reason;
            if ((c.bound == "thm1.10" || c.bound == "thm4.5") &&
                girth(graph) < GirthValue::finite(5))
                skip_reason = "girth below 5 (hypothesis unmet)";
            if (c.bound == "birkhoff" && graph.vertex_count() < 3)
                skip_reason = "fewer than 3 vertices (hypothesis unmet)";
            if (!skip_reason.empty()) {
                json row = json::object();
                row["graph"] = gid;
                row["bound_name"] = c.bound;
                row["skipped"] = skip_reason;
                rows.push_back(row);
                csv += gid + "," + c.bound + ",," + "skipped\n";
                continue;
            }
            std::vector<std::pair<std::string, CorrespondenceAssignment>> assignments;
            if (c.bound == "localgirth") {
                assignments.emplace_back("localgirth", local_girth_lists(graph));
            } else if (c.bound == "birkhoff") {
                assignments.emplace_back("identity", identity_assignment(graph, c.k));
            } else {
                assignments = realize_assignments(c, graph, rng);
            }
            for (const auto& [label, a] : assignments) {
                BoundVerdict v;
                CountResult r;
                if (c.bound == "thm1.6") {
                    r = count_colourings(graph, a, g.budget);
                    v = verify_bound(r, {"thm1.6", BigInt(2),
                                         thm_planar_5cc_bound(graph.vertex_count())});
                } else if (c.bound == "thm1.10") {
                    require_girth_at_least_5(graph, c.bound);
                    r = count_colourings(graph, a, g.budget);
                    v = verify_bound(r, {"thm1.10", BigInt(2),
                                         thm_planar_3cc_girth5_bound(graph.vertex_count())});
                } else if (c.bound == "thm3.2" || c.bound == "thm4.5") {
                    if (c.bound == "thm4.5") require_girth_at_least_5(graph, c.bound);
                    SubgraphRef s = subgraph_from_opts(graph, c);
                    PartialColouring phi = parse_phi(c.phi);
                    r = count_extensions(graph, a, s, phi, g.budget);
                    Rational exp = c.bound == "thm3.2" ? thm_extension_5cc_bound(graph, s)
                                                       : thm_extension_3cc_bound(graph, s);
                    v = verify_bound(r, {c.bound, BigInt(2), exp});
                } else if (c.bound == "alonfuredi") {
                    AlonFurediParams params = alon_furedi_params(graph, a, c.t);
                    r = count_colourings(graph, a, g.budget);
                    v = verify_bound(r, alon_furedi(params.s_sum, params.n, params.d,
                                                    params.t));
                } else if (c.bound == "localgirth") {
                    r = count_colourings(graph, a, g.budget);
                    v = verify_bound(r, {"localgirth", BigInt(5),
                                         local_girth_bound(graph.vertex_count())});
                } else {  // birkhoff
                    r = count_colourings(graph, a, g.budget);
                    v = verify_flat_bound(r, "birkhoff",
                                          birkhoff_lewis_bound(graph.vertex_count()));
                }
                any_fail = any_fail || !v.holds;
                any_undecided = any_undecided || (r.truncated && !v.holds);
                json row = json::object();
                row["graph"] = gid;
                row["assignment"] = label;
                row["verdict"] = bound_verdict_json(v);
                rows.push_back(row);
                csv += bound_verdict_csv_row(gid, v) + "\n";
            }
        }
    }

    RunManifest man = make_manifest("verify", c, g);
    if (g.format == "csv") {
        write_output(csv, g.out_path);
    } else {
        json doc = json::object();
        doc["manifest"] = manifest_json(man);
        doc["results"] = rows;
        doc["all_hold"] = !any_fail;
        write_output(dump_doc(doc), g.out_path);
    }
    if (any_undecided) return kExitBudget;
    return any_fail ? kExitFalsified : kExitOk;
}

// ---- extend ----------------------------------------------------------------

int cmd_extend(const CommandOpts& c, const GlobalOpts& g) {
    if (g.format == "csv") throw UsageError("extend reports are JSON only");
    std::vector<PlaneGraph> embeddings = collect_embeddings(c);
    if (embeddings.size() != 1)
        throw UsageError("extend needs exactly one --plane or --embedding input");
    const PlaneGraph& pg = embeddings.front();
    const Graph& graph = pg.graph();

    PartialColouring result;
    CommandOpts resolved = c;
    if (c.mode == "5cc" || c.mode == "3cc") {
        std::mt19937_64 rng(g.seed);
        if (resolved.assignment == "identity" && resolved.k == 0)
            resolved.k = c.mode == "5cc" ? 5 : 3;
        auto assignments = realize_assignments(resolved, graph, rng);
        if (assignments.size() != 1)
            throw UsageError("extend needs exactly one assignment");
        const CorrespondenceAssignment& a = assignments.front().second;
        SubgraphRef s = walk_subgraph(graph, c.s_walk);
        PartialColouring phi = parse_phi(c.phi);
        if (c.mode == "5cc") {
            result = extend_5cc(pg, a, s, phi, g.budget);
        } else {
            result = extend_3cc_girth5(pg, a, s, parse_vertex_list(c.independent2),
                                       phi, g.budget);
        }
    } else if (c.mode == "deletable") {
        if (c.r == 0) throw UsageError("--r is required for deletable extension");
        SubgraphRef h = subgraph_from_opts(graph, c);
        if (c.assignment == "identity" || c.assignment == "random")
            throw UsageError("deletable extension needs --assignment FILE with the "
                             "challenge lists for the subgraph");
        IngestResult ir = ingest(c.assignment);
        if (ir.assignments.size() != 1)
            throw UsageError("deletable extension needs exactly one assignment");
        CorrespondenceAssignment challenge = ir.assignments[0].realize(h.materialize());
        result = check_deletable_via_extension(pg, h, c.r, challenge, g.budget);
    } else {
        throw UsageError("extend --mode must be 5cc, 3cc, or deletable");
    }

    json colouring = json::object();
    for (const auto& [v, col] : result) colouring[std::to_string(v)] = col;
    json doc = json::object();
    doc["manifest"] = manifest_json(make_manifest("extend", resolved, g));
    doc["colouring"] = colouring;
    write_output(dump_doc(doc), g.out_path);
    return kExitOk;
}

// ---- search ----------------------------------------------------------------

json deletion_json(const SubgraphDeletion& d) {
    json out = json::object();
    if (d.edge) out["edge"] = json::array({d.edge->first, d.edge->second});
    if (d.vertex) out["vertex"] = *d.vertex;
    return out;
}

json verdict_line(const DeletabilityVerdict& v) {
    json line = json::object();
    line["type"] = "verdict";
    switch (v.status) {
        case DeletabilityStatus::deletable: line["status"] = "deletable"; break;
        case DeletabilityStatus::not_deletable: line["status"] = "not_deletable"; break;
        case DeletabilityStatus::unknown_budget: line["status"] = "unknown_budget"; break;
    }
    if (v.witness) line["witness"] = assignment_to_json(*v.witness);
    line["checked_assignments"] = v.checked_assignments.get_str();
    return line;
}

int cmd_search(const CommandOpts& c, const GlobalOpts& g) {
    if (g.format == "csv") throw UsageError("search streams JSON lines only");
    std::vector<Graph> graphs = collect_graphs(c);
    if (graphs.size() != 1) throw UsageError("search needs exactly one graph");
    const Graph& graph = graphs.front();

    std::string out;
    int code = kExitOk;
    if (c.mode == "deletable") {
        if (c.r == 0) throw UsageError("--r is required for deletability searches");
        SubgraphRef h = SubgraphRef::induced(graph, parse_vertex_list(c.subgraph));
        DeletableSearchResult res = deletable_subgraph_search(
            graph, h, c.r, BigInt(g.assignment_budget), g.budget);
        if (res.x) {
            json line = json::object();
            line["type"] = "deletable";
            line["x"] = *res.x;
            line["checked_assignments"] = res.checked_assignments.get_str();
            out += line.dump() + "\n";
        }
        if (!res.exhaustive) {
            json line = json::object();
            line["type"] = "budget-exhausted";
            line["checked_assignments"] = res.checked_assignments.get_str();
            out += line.dump() + "\n";
            code = kExitBudget;
        }
    } else if (c.mode == "is-deletable" || c.mode == "exp-deletable") {
        if (c.r == 0) throw UsageError("--r is required for deletability verdicts");
        SubgraphRef h = SubgraphRef::induced(graph, parse_vertex_list(c.subgraph));
        DeletabilityVerdict v;
        if (c.mode == "is-deletable") {
            v = is_deletable(graph, h, c.r, BigInt(g.assignment_budget), g.budget,
                             256, g.seed);
        } else {
            Rational eps = c.epsilon.empty() ? default_epsilon(c.gparam)
                                             : parse_rational(c.epsilon);
            v = is_exponentially_deletable(graph, h, c.r, eps,
                                           BigInt(g.assignment_budget), g.budget,
                                           256, g.seed);
        }
        out += verdict_line(v).dump() + "\n";
        if (v.status == DeletabilityStatus::unknown_budget) code = kExitBudget;
    } else if (c.mode == "critical") {
        SubgraphRef s = subgraph_from_opts(graph, c);
        if (c.assignment == "identity" || c.assignment == "random")
            throw UsageError("criticality checks need --assignment FILE");
        IngestResult ir = ingest(c.assignment);
        if (ir.assignments.size() != 1)
            throw UsageError("criticality checks need exactly one assignment");
        CorrespondenceAssignment a = ir.assignments[0].realize(graph);
        CriticalityResult res =
            is_critical(graph, s, a, BigInt(g.assignment_budget), g.budget);
        if (res.critical) {
            json entries = json::array();
            for (const CriticalCertificateEntry& e : res.certificate) {
                json entry = json::object();
                entry["removed"] = deletion_json(e.removed);
                json phi = json::object();
                for (const auto& [v, col] : e.phi) phi[std::to_string(v)] = col;
                entry["phi"] = phi;
                entries.push_back(entry);
            }
            json line = json::object();
            line["type"] = "critical";
            line["certificate"] = entries;
            out += line.dump() + "\n";
        }
    } else {
        throw UsageError("search --mode must be deletable, is-deletable, "
                         "exp-deletable, or critical");
    }
    write_output(out, g.out_path);
    return code;
}

// ---- deficiency --------------------------------------------------------------

int cmd_deficiency(const CommandOpts& c, const GlobalOpts& g) {
    std::vector<Graph> graphs = collect_graphs(c);
    if (graphs.empty()) throw UsageError("deficiency needs --graph or --input");
    std::optional<Rational> eps;
    if (!c.epsilon.empty()) eps = parse_rational(c.epsilon);

    json rows = json::array();
    std::string csv = "graph_id,g_param,v_diff,e_diff,def,epsilon,d_sign\n";
    int index = 0;
    for (const Graph& graph : graphs) {
        std::string gid = graph_id(graph, index++);
        SubgraphRef h = subgraph_from_opts(graph, c);
        DeficiencyReport rep = deficiency(graph, h, c.gparam, eps);
        json row = json::object();
        row["graph"] = gid;
        row["g_param"] = rep.g_param;
        row["v_diff"] = rep.v_diff;
        row["e_diff"] = rep.e_diff;
        row["def"] = rep.def_g;
        row["epsilon"] = rational_json(rep.epsilon);
        row["d_sign"] = rep.d_scaled_sign;
        if (!c.threshold.empty())
            row["meets_threshold"] = d_ge_check(graph, h, c.gparam, rep.epsilon,
                                                parse_rational(c.threshold));
        rows.push_back(row);
        csv += gid + "," + std::to_string(rep.g_param) + "," +
               std::to_string(rep.v_diff) + "," + std::to_string(rep.e_diff) + "," +
               std::to_string(rep.def_g) + "," + rational_to_string(rep.epsilon) +
               "," + std::to_string(rep.d_scaled_sign) + "\n";
    }

    CommandOpts cm = c;
    RunManifest man = make_manifest("deficiency", cm, g);
    man.parameters["gparam"] = std::to_string(c.gparam);
    if (g.format == "csv") {
        write_output(csv, g.out_path);
    } else {
        json doc = json::object();
        doc["manifest"] = manifest_json(man);
        doc["results"] = rows;
        write_output(dump_doc(doc), g.out_path);
    }
    return kExitOk;
}

// ---- girth ---------------------------------------------------------------------

int cmd_girth(const CommandOpts& c, const GlobalOpts& g) {
    std::vector<Graph> graphs = collect_graphs(c);
    if (graphs.empty()) throw UsageError("girth needs --graph or --input");

    json rows = json::array();
    std::string csv = "graph_id,girth\n";
    int index = 0;
    for (const Graph& graph : graphs) {
        std::string gid = graph_id(graph, index++);
        json row = json::object();
        row["graph"] = gid;
        GirthValue value = GirthValue::infinite();
        if (!c.edge.empty()) {
            std::vector<Edge> es = parse_edge_list(c.edge);
            if (es.size() != 1) throw UsageError("--edge takes a single u-v pair");
            value = edge_girth(graph, es[0]);
            row["edge"] = json::array({es[0].first, es[0].second});
            row["edge_girth"] = value.to_string();
        } else if (c.vertex >= 0) {
            value = vertex_girth(graph, c.vertex);
            row["vertex"] = c.vertex;
            row["vertex_girth"] = value.to_string();
        } else {
            value = girth(graph);
            row["girth"] = value.to_string();
        }
        rows.push_back(row);
        csv += gid + "," + value.to_string() + "\n";
    }

    RunManifest man = make_manifest("girth", c, g);
    if (g.format == "csv") {
        write_output(csv, g.out_path);
    } else {
        json doc = json::object();
        doc["manifest"] = manifest_json(man);
        doc["results"] = rows;
        write_output(dump_doc(doc), g.out_path);
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    GlobalOpts g;
    CommandOpts c;

    CLI::App app{"exact correspondence-colouring toolkit"};
    app.require_subcommand(1);
    app.add_option("--budget", g.budget, "search node budget");
    app.add_option("--assignment-budget", g.assignment_budget,
                   "assignment enumeration budget");
    app.add_option("--seed", g.seed, "seed for randomized assignments");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "write the report to a file");

    auto add_graph_inputs = [&c](CLI::App* sub) {
        sub->add_option("--graph", c.graphs,
                        "graph token: family (c5, p4, w5, k4, grid2x3, icosahedron, "
                        "dodecahedron) or graph6 literal");
        sub->add_option("--input", c.inputs, "graph6 or JSON input file");
    };
    auto add_embedding_inputs = [&c](CLI::App* sub) {
        sub->add_option("--plane", c.planes, "plane family token");
        sub->add_option("--embedding", c.embeddings, "JSON embedding file");
    };
    auto add_assignment = [&c](CLI::App* sub) {
        sub->add_option("--assignment", c.assignment,
                        "identity, random, or a JSON assignment file");
        sub->add_option("--k", c.k, "list size for identity/random assignments");
        sub->add_option("--samples", c.samples, "random assignments per graph");
    };

    CLI::App* count = app.add_subcommand("count", "count colourings or extensions");
    add_graph_inputs(count);
    add_assignment(count);
    count->add_option("--subgraph", c.subgraph, "precoloured vertex subset");
    count->add_option("--subgraph-edges", c.subgraph_edges,
                      "edge subset (default: induced)");
    count->add_option("--phi", c.phi, "precolouring, e.g. 0=1,3=2");

    CLI::App* extend = app.add_subcommand("extend", "construct a colouring extension");
    add_embedding_inputs(extend);
    add_assignment(extend);
    extend->add_option("--mode", c.mode, "5cc, 3cc, or deletable")->required();
    extend->add_option("--s", c.s_walk, "precoloured walk, e.g. 0,1");
    extend->add_option("--phi", c.phi, "precolouring of the walk");
    extend->add_option("--independent2", c.independent2,
                       "independent boundary vertices with 2-lists (3cc)");
    extend->add_option("--subgraph", c.subgraph, "subgraph to delete (deletable)");
    extend->add_option("--subgraph-edges", c.subgraph_edges,
                       "edge subset (default: induced)");
    extend->add_option("--r", c.r, "deletability parameter (3 or 5)");

    CLI::App* verify = app.add_subcommand("verify", "verify counting bounds");
    add_graph_inputs(verify);
    add_embedding_inputs(verify);
    add_assignment(verify);
    verify->add_option("--bound", c.bound, "bound token")->required();
    verify->add_option("--subgraph", c.subgraph, "precoloured vertex subset");
    verify->add_option("--subgraph-edges", c.subgraph_edges,
                       "edge subset (default: induced)");
    verify->add_option("--phi", c.phi, "precolouring of the subset");
    verify->add_option("--t", c.t, "minimum list size parameter");

    CLI::App* search = app.add_subcommand("search",
                                          "criticality / deletability searches");
    add_graph_inputs(search);
    search->add_option("--mode", c.mode,
                       "deletable, is-deletable, exp-deletable, or critical")
        ->required();
    search->add_option("--subgraph", c.subgraph, "subgraph vertices");
    search->add_option("--subgraph-edges", c.subgraph_edges,
                       "edge subset (default: induced)");
    search->add_option("--assignment", c.assignment, "JSON assignment file");
    search->add_option("--r", c.r, "deletability parameter");
    search->add_option("--epsilon", c.epsilon, "exponential rate, e.g. 1/50");
    search->add_option("--gparam", c.gparam, "girth parameter for default epsilon");

    CLI::App* deficiency = app.add_subcommand("deficiency", "deficiency reports");
    add_graph_inputs(deficiency);
    deficiency->add_option("--subgraph", c.subgraph, "subgraph vertices")->required();
    deficiency->add_option("--subgraph-edges", c.subgraph_edges,
                           "edge subset (default: induced)");
    deficiency->add_option("--gparam", c.gparam, "girth parameter (3 or 5)");
    deficiency->add_option("--epsilon", c.epsilon, "scale, e.g. 1/50");
    deficiency->add_option("--threshold", c.threshold, "threshold, e.g. 23/10");

    CLI::App* girth_cmd = app.add_subcommand("girth", "girth reports");
    add_graph_inputs(girth_cmd);
    girth_cmd->add_option("--edge", c.edge, "shortest cycle through edge u-v");
    girth_cmd->add_option("--vertex", c.vertex, "shortest cycle through a vertex");

    for (CLI::App* sub : {count, extend, verify, search, deficiency, girth_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(c, g);
        if (extend->parsed()) return cmd_extend(c, g);
        if (verify->parsed()) return cmd_verify(c, g);
        if (search->parsed()) return cmd_search(c, g);
        if (deficiency->parsed()) return cmd_deficiency(c, g);
        if (girth_cmd->parsed()) return cmd_girth(c, g);
        std::cerr << "no command given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionViolation& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const TheoremFalsified& e) {
        std::cerr << "theorem falsified: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace corrcount::io
