#include "corrcount/plane.hpp"

#include <algorithm>
#include <set>

namespace corrcount {

std::vector<int> Face::vertex_set() const {
    std::vector<int> vs = walk;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<Edge> Face::edge_set() const {
    if (walk.size() < 2) return {};
    std::set<Edge> es;
    for (size_t i = 0; i < walk.size(); ++i)
        es.insert(make_edge(walk[i], walk[(i + 1) % walk.size()]));
    return {es.begin(), es.end()};
}

namespace {

// Two closed walks describe the same face boundary if equal up to rotation
// and reversal.
bool same_closed_walk(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    size_t n = a.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t shift = 0; shift < n; ++shift) {
            bool match = true;
            for (size_t i = 0; i < n && match; ++i) {
                size_t j = dir == 0 ? (shift + i) % n : (shift + n - i) % n;
                if (a[i] != b[j]) match = false;
            }
            if (match) return true;
        }
    }
    return false;
}

}  // namespace

PlaneGraph::PlaneGraph(Graph graph, std::map<int, std::vector<int>> rotation,
                       std::vector<int> outer_face)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    // Rotation must list exactly the neighbours of every vertex.
    for (int v : graph_.vertices()) {
        auto it = rotation_.find(v);
        if (it == rotation_.end())
            throw PreconditionViolation("rotation missing vertex " + std::to_string(v));
        std::vector<int> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionViolation("rotation repeats a neighbour at vertex " +
                                        std::to_string(v));
        if (sorted != graph_.neighbours(v))
            throw PreconditionViolation(
                "rotation at vertex " + std::to_string(v) +
                " does not list exactly its neighbours");
    }
    if (rotation_.size() != static_cast<size_t>(graph_.vertex_count()))
        throw PreconditionViolation("rotation mentions unknown vertices");

    // Trace the dart orbits: next(u->v) = (v -> successor of u around v).
    std::set<std::pair<int, int>> pending;
    for (const auto& [u, v] : graph_.edges()) {
        pending.insert({u, v});
        pending.insert({v, u});
    }
    auto successor = [&](int v, int incoming) {
        const auto& rot = rotation_.at(v);
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == incoming) return rot[(i + 1) % rot.size()];
        throw PreconditionViolation("rotation inconsistency");
    };
    while (!pending.empty()) {
        auto start = *pending.begin();
        Face face;
        auto dart = start;
        do {
            pending.erase(dart);
            face.walk.push_back(dart.first);
            dart = {dart.second, successor(dart.second, dart.first)};
        } while (dart != start);
        faces_.push_back(std::move(face));
    }
    // Isolated vertices each bound one face on their own.
    for (int v : graph_.vertices())
        if (graph_.degree(v) == 0) faces_.push_back(Face{{v}});

    int f = static_cast<int>(faces_.size());
    int components = graph_.component_count();
    if (graph_.vertex_count() - graph_.edge_count() + f != 2 * components)
        throw PreconditionViolation(
            "rotation system fails the Euler check: v-e+f != 2 per component");

    int found = -1;
    for (size_t i = 0; i < faces_.size(); ++i)
        if (same_closed_walk(faces_[i].walk, outer_face)) {
            found = static_cast<int>(i);
            break;
        }
    if (found < 0)
        throw PreconditionViolation("designated outer face is not a traced face");
    outer_index_ = found;
}

std::vector<int> PlaneGraph::interior_vertices() const {
    auto boundary = outer_vertices();
    std::vector<int> out;
    for (int v : graph_.vertices())
        if (!std::binary_search(boundary.begin(), boundary.end(), v)) out.push_back(v);
    return out;
}

PlaneGraph PlaneGraph::induced_subembedding(const std::vector<int>& vertex_subset,
                                            const std::vector<int>& outer_hint) const {
    std::vector<int> keep = vertex_subset;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    Graph sub = SubgraphRef::induced(graph_, keep).materialize();
    std::map<int, std::vector<int>> rot;
    for (int v : keep) {
        std::vector<int> order;
        for (int w : rotation_.at(v))
            if (std::binary_search(keep.begin(), keep.end(), w)) order.push_back(w);
        rot[v] = std::move(order);
    }
    // Trace the restricted system by building with a provisional outer face,
    // then pick the face matching the hint.
    PlaneGraph probe(sub, rot, [&] {
        // any traced face works for probing; reuse the constructor's tracer by
        // computing one orbit manually
        if (sub.edge_count() == 0) {
            if (sub.vertex_count() == 0)
                throw PreconditionViolation("empty sub-embedding");
            return std::vector<int>{sub.vertices().front()};
        }
        auto successor = [&](int v, int incoming) {
            const auto& r = rot.at(v);
            for (size_t i = 0; i < r.size(); ++i)
                if (r[i] == incoming) return r[(i + 1) % r.size()];
            throw PreconditionViolation("rotation inconsistency");
        };
        auto [a, b] = sub.edges().front();
        std::vector<int> walk;
        std::pair<int, int> start{a, b}, dart{a, b};
        do {
            walk.push_back(dart.first);
            dart = {dart.second, successor(dart.second, dart.first)};
        } while (dart != start);
        return walk;
    }());
    // Choose the outer face: must contain all hint vertices; tie-break on
    // longest walk, then first.
    int best = -1;
    for (size_t i = 0; i < probe.faces().size(); ++i) {
        auto vs = probe.faces()[i].vertex_set();
        bool ok = true;
        for (int h : outer_hint)
            if (!std::binary_search(vs.begin(), vs.end(), h)) ok = false;
        if (!ok) continue;
        if (best < 0 ||
            probe.faces()[i].length() > probe.faces()[best].length())
            best = static_cast<int>(i);
    }
    if (best < 0)
        throw PreconditionViolation(
            "no face of the sub-embedding contains the requested boundary vertices");
    return PlaneGraph(sub, rot, probe.faces()[best].walk);
}

// --- built-in plane families -------------------------------------------------

PlaneGraph plane_cycle(int n) {
    Graph g = cycle_graph(n);
    std::map<int, std::vector<int>> rot;
    std::vector<int> outer(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
        outer[i] = i;
    }
    return PlaneGraph(g, rot, outer);
}

PlaneGraph plane_path(int n) {
    Graph g = path_graph(n);
    std::map<int, std::vector<int>> rot;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r;
        if (i > 0) r.push_back(i - 1);
        if (i + 1 < n) r.push_back(i + 1);
        rot[i] = r;
    }
    std::vector<int> outer;
    if (n == 1) {
        outer = {0};
    } else {
        for (int i = 0; i + 1 < n; ++i) outer.push_back(i);
        for (int i = n - 1; i > 0; --i) outer.push_back(i);
    }
    return PlaneGraph(g, rot, outer);
}

PlaneGraph plane_wheel(int n) {
    Graph g = wheel_graph(n);
    std::map<int, std::vector<int>> rot;
    std::vector<int> outer(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = {(i + 1) % n, n, (i + n - 1) % n};
        outer[i] = i;
    }
    std::vector<int> hub(n);
    for (int i = 0; i < n; ++i) hub[i] = i;
    rot[n] = hub;
    return PlaneGraph(g, rot, outer);
}

PlaneGraph plane_complete(int n) {
    if (n > 4) throw PreconditionViolation("no plane embedding for complete graphs beyond 4");
    if (n <= 2) {
        Graph g = complete_graph(n);
        std::map<int, std::vector<int>> rot;
        std::vector<int> outer;
        for (int v : g.vertices()) {
            std::vector<int> r;
            for (int w : g.neighbours(v)) r.push_back(w);
            rot[v] = r;
        }
        if (n == 1) outer = {0};
        if (n == 2) outer = {0, 1};
        return PlaneGraph(g, rot, outer);
    }
    if (n == 3) return plane_cycle(3);
    return plane_wheel(3);  // K4 = 3-rim wheel
}

PlaneGraph plane_grid(int m, int n) {
    Graph g = grid_graph(m, n);
    auto vid = [n](int i, int j) { return i * n + j; };
    std::map<int, std::vector<int>> rot;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> r;
            if (j + 1 < n) r.push_back(vid(i, j + 1));
            if (i - 1 >= 0) r.push_back(vid(i - 1, j));
            if (j - 1 >= 0) r.push_back(vid(i, j - 1));
            if (i + 1 < m) r.push_back(vid(i + 1, j));
            rot[vid(i, j)] = r;
        }
    std::vector<int> outer;
    if (m == 1 || n == 1) {
        int len = m * n;
        if (len == 1) {
            outer = {0};
        } else {
            for (int t = 0; t + 1 < len; ++t) outer.push_back(t);
            for (int t = len - 1; t > 0; --t) outer.push_back(t);
        }
    } else {
        for (int j = 0; j < n - 1; ++j) outer.push_back(vid(0, j));
        for (int i = 0; i < m - 1; ++i) outer.push_back(vid(i, n - 1));
        for (int j = n - 1; j > 0; --j) outer.push_back(vid(m - 1, j));
        for (int i = m - 1; i > 0; --i) outer.push_back(vid(i, 0));
    }
    return PlaneGraph(g, rot, outer);
}

namespace family_tables {

// Frozen from a validated planar embedding (scripts/gen_embeddings.py); the
// constructor's Euler check re-verifies them.
extern const std::vector<std::vector<int>> icosahedron_rotation;
const std::vector<std::vector<int>> icosahedron_rotation = {
    {1, 5, 11, 7, 8},  {0, 8, 2, 6, 5},  {1, 8, 9, 3, 6},  {2, 9, 10, 4, 6},
    {3, 10, 11, 5, 6}, {4, 11, 0, 1, 6}, {5, 1, 2, 3, 4},  {11, 10, 9, 8, 0},
    {7, 9, 2, 1, 0},   {8, 7, 10, 3, 2}, {9, 7, 11, 4, 3}, {5, 4, 10, 7, 0},
};
const std::vector<int> icosahedron_outer = {0, 1, 8};

extern const std::vector<std::vector<int>> dodecahedron_rotation;
const std::vector<std::vector<int>> dodecahedron_rotation = {
    {1, 10, 19}, {0, 2, 8},   {1, 3, 6},   {2, 19, 4},  {3, 17, 5},
    {4, 15, 6},  {5, 7, 2},   {6, 14, 8},  {7, 9, 1},   {8, 13, 10},
    {9, 11, 0},  {10, 12, 18}, {11, 13, 16}, {12, 9, 14}, {13, 7, 15},
    {14, 5, 16}, {15, 17, 12}, {16, 4, 18}, {17, 19, 11}, {18, 3, 0},
};
const std::vector<int> dodecahedron_outer = {0, 1, 2, 3, 19};

}  // namespace family_tables

namespace {

PlaneGraph from_table(const std::vector<std::vector<int>>& table,
                      const std::vector<int>& outer) {
    std::vector<int> verts(table.size());
    std::vector<Edge> edges;
    std::map<int, std::vector<int>> rot;
    for (size_t v = 0; v < table.size(); ++v) {
        verts[v] = static_cast<int>(v);
        rot[static_cast<int>(v)] = table[v];
        for (int w : table[v])
            if (static_cast<int>(v) < w) edges.emplace_back(static_cast<int>(v), w);
    }
    return PlaneGraph(Graph(std::move(verts), std::move(edges)), rot, outer);
}

}  // namespace

PlaneGraph plane_icosahedron() {
    return from_table(family_tables::icosahedron_rotation,
                      family_tables::icosahedron_outer);
}

PlaneGraph plane_dodecahedron() {
    return from_table(family_tables::dodecahedron_rotation,
                      family_tables::dodecahedron_outer);
}

}  // namespace corrcount
