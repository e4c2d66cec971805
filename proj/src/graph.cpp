#include "corrcount/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>

namespace corrcount {

namespace {

std::atomic<int> g_max_vertices{64};

}  // namespace

int Graph::max_vertices() { return g_max_vertices.load(); }

void Graph::set_max_vertices(int cap) {
    if (cap < 1) throw PreconditionViolation("vertex cap must be positive");
    g_max_vertices.store(cap);
}

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!vertices.empty() && vertices.front() < 0)
        throw PreconditionViolation("negative vertex id");
    if (static_cast<int>(vertices.size()) > max_vertices())
        throw PreconditionViolation("graph exceeds the configured vertex cap of " +
                                    std::to_string(max_vertices()));
    verts_ = std::move(vertices);
    std::set<Edge> norm;
    for (const auto& [u, v] : edges) norm.insert(make_edge(u, v));
    edges_.assign(norm.begin(), norm.end());
    for (int v : verts_) adj_[v];
    for (const auto& [u, v] : edges_) {
        if (!adj_.count(u) || !adj_.count(v))
            throw PreconditionViolation("edge endpoint not a declared vertex");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    std::vector<int> verts;
    for (const auto& [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    return Graph(std::move(verts), edges);
}

bool Graph::has_vertex(int v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

const std::vector<int>& Graph::neighbours(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw PreconditionViolation("unknown vertex " + std::to_string(v));
    return it->second;
}

bool Graph::is_connected() const { return component_count() <= 1; }

int Graph::component_count() const {
    std::set<int> unseen(verts_.begin(), verts_.end());
    int components = 0;
    while (!unseen.empty()) {
        ++components;
        std::deque<int> queue{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : neighbours(v)) {
                if (unseen.erase(w)) queue.push_back(w);
            }
        }
    }
    return components;
}

// --- graph6 codec (format: McKay's graph6, ids 0..n-1, no header) ---------

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int byte = 0;
        for (size_t j = 0; j < 6; ++j) {
            byte <<= 1;
            if (i + j < bits.size() && bits[i + j]) byte |= 1;
        }
        out.push_back(static_cast<char>(byte + kG6Offset));
    }
}

}  // namespace

Graph Graph::from_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("empty graph6 line");
    if (line[0] == ':' || line[0] == ';')
        throw ParseError("sparse6 input is not supported; expected graph6");
    size_t pos = 0;
    long n = 0;
    auto byte_at = [&](size_t i) -> int {
        if (i >= line.size()) throw ParseError("truncated graph6 line");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
        return c - kG6Offset;
    };
    if (byte_at(0) < 63) {
        n = byte_at(0);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6 order beyond supported range");
        n = (long(byte_at(1)) << 12) | (long(byte_at(2)) << 6) | long(byte_at(3));
        pos = 4;
    }
    if (n > max_vertices())
        throw ParseError("graph6 order " + std::to_string(n) +
                         " exceeds the configured vertex cap");
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) != nbytes)
        throw ParseError("graph6 line has wrong length for order " + std::to_string(n));
    std::vector<int> verts(n);
    for (long i = 0; i < n; ++i) verts[i] = static_cast<int>(i);
    std::vector<Edge> edges;
    long bit = 0;
    for (long j = 1; j < n; ++j) {
        for (long i = 0; i < j; ++i, ++bit) {
            int byte = byte_at(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return Graph(std::move(verts), std::move(edges));
}

std::string Graph::to_graph6() const {
    int n = vertex_count();
    for (int i = 0; i < n; ++i)
        if (!has_vertex(i))
            throw PreconditionViolation("graph6 encoding requires vertex ids 0..n-1");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(has_edge(i, j));
    append_bits(out, bits);
    return out;
}

// --- subgraph references ---------------------------------------------------

SubgraphRef::SubgraphRef(const Graph& parent, std::vector<int> vertex_subset,
                         std::vector<Edge> edge_subset, bool induced)
    : parent_(parent), induced_(induced) {
    std::sort(vertex_subset.begin(), vertex_subset.end());
    vertex_subset.erase(std::unique(vertex_subset.begin(), vertex_subset.end()),
                        vertex_subset.end());
    std::set<Edge> norm;
    for (const auto& [u, v] : edge_subset) norm.insert(make_edge(u, v));
    verts_ = std::move(vertex_subset);
    edges_.assign(norm.begin(), norm.end());
    for (int v : verts_)
        if (!parent_.has_vertex(v))
            throw PreconditionViolation("subgraph vertex " + std::to_string(v) +
                                        " not in parent");
    for (const auto& [u, v] : edges_) {
        if (!parent_.has_edge(u, v))
            throw PreconditionViolation("subgraph edge not in parent");
        if (!has_vertex(u) || !has_vertex(v))
            throw PreconditionViolation("subgraph edge endpoint outside vertex subset");
    }
    if (induced_) {
        for (const auto& [u, v] : parent_.edges()) {
            bool inside = has_vertex(u) && has_vertex(v);
            bool listed = std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
            if (inside != listed)
                throw PreconditionViolation(
                    "induced flag inconsistent with edge subset");
        }
    }
}

SubgraphRef SubgraphRef::induced(const Graph& parent, std::vector<int> vertex_subset) {
    std::sort(vertex_subset.begin(), vertex_subset.end());
    std::vector<Edge> edges;
    for (const auto& [u, v] : parent.edges())
        if (std::binary_search(vertex_subset.begin(), vertex_subset.end(), u) &&
            std::binary_search(vertex_subset.begin(), vertex_subset.end(), v))
            edges.emplace_back(u, v);
    return SubgraphRef(parent, std::move(vertex_subset), std::move(edges), true);
}

SubgraphRef SubgraphRef::of(const Graph& parent, std::vector<int> vertex_subset,
                            std::vector<Edge> edge_subset) {
    return SubgraphRef(parent, std::move(vertex_subset), std::move(edge_subset), false);
}

SubgraphRef SubgraphRef::whole(const Graph& parent) {
    return SubgraphRef(parent, parent.vertices(), parent.edges(), true);
}

bool SubgraphRef::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool SubgraphRef::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              make_edge(e.first, e.second));
}

Graph SubgraphRef::materialize() const { return Graph(verts_, edges_); }

// --- girth ------------------------------------------------------------------

namespace {

// Shortest path length between a and b in g avoiding the edge (a,b); -1 if none.
int shortest_path_avoiding(const Graph& g, int a, int b) {
    std::map<int, int> dist;
    std::deque<int> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbours(v)) {
            if (v == a && w == b) continue;
            if (v == b && w == a) continue;
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                if (w == b) return dist[w];
                queue.push_back(w);
            }
        }
    }
    return -1;
}

}  // namespace

GirthValue edge_girth(const Graph& g, const Edge& e) {
    auto [u, v] = make_edge(e.first, e.second);
    if (!g.has_edge(u, v)) throw PreconditionViolation("edge_girth: edge not in graph");
    int d = shortest_path_avoiding(g, u, v);
    if (d < 0) return GirthValue::infinite();
    return GirthValue::finite(d + 1);
}

GirthValue vertex_girth(const Graph& g, int v) {
    GirthValue best = GirthValue::infinite();
    for (int w : g.neighbours(v)) {
        GirthValue c = edge_girth(g, {v, w});
        if (c < best) best = c;
    }
    return best;
}

GirthValue girth(const Graph& g) {
    GirthValue best = GirthValue::infinite();
    for (const auto& e : g.edges()) {
        GirthValue c = edge_girth(g, e);
        if (c < best) best = c;
    }
    return best;
}

// --- subgraph arithmetic and vertex-set helpers ------------------------------

std::pair<int, int> diff_counts(const Graph& g, const SubgraphRef& h) {
    for (int v : h.vertex_subset())
        if (!g.has_vertex(v))
            throw PreconditionViolation("diff_counts: subgraph vertex not in graph");
    for (const auto& [u, v] : h.edge_subset())
        if (!g.has_edge(u, v))
            throw PreconditionViolation("diff_counts: subgraph edge not in graph");
    return {g.vertex_count() - h.vertex_count(), g.edge_count() - h.edge_count()};
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

std::vector<int> neighbours_in(const Graph& g, int v, const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int w : g.neighbours(v))
        if (std::binary_search(sorted.begin(), sorted.end(), w)) out.push_back(w);
    return out;
}

// --- built-in families --------------------------------------------------------

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionViolation("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(edges);
}

Graph path_graph(int n) {
    if (n < 1) throw PreconditionViolation("path needs n >= 1");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(verts), std::move(edges));
}

Graph wheel_graph(int n) {
    if (n < 3) throw PreconditionViolation("wheel needs rim size >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(make_edge(i, (i + 1) % n));
        edges.emplace_back(i, n);
    }
    return Graph::from_edges(edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw PreconditionViolation("complete graph needs n >= 1");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(std::move(verts), std::move(edges));
}

Graph grid_graph(int m, int n) {
    if (m < 1 || n < 1) throw PreconditionViolation("grid needs positive dimensions");
    std::vector<int> verts(m * n);
    for (int i = 0; i < m * n; ++i) verts[i] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (j + 1 < n) edges.emplace_back(i * n + j, i * n + j + 1);
            if (i + 1 < m) edges.emplace_back(i * n + j, (i + 1) * n + j);
        }
    return Graph(std::move(verts), std::move(edges));
}

namespace family_tables {
// Shared with plane.cpp, which freezes the matching rotation systems.
extern const std::vector<std::vector<int>> icosahedron_rotation;
extern const std::vector<std::vector<int>> dodecahedron_rotation;
}  // namespace family_tables

namespace {

Graph graph_from_rotation(const std::vector<std::vector<int>>& rot) {
    std::vector<int> verts(rot.size());
    std::vector<Edge> edges;
    for (size_t v = 0; v < rot.size(); ++v) {
        verts[v] = static_cast<int>(v);
        for (int w : rot[v])
            if (static_cast<int>(v) < w) edges.emplace_back(static_cast<int>(v), w);
    }
    return Graph(std::move(verts), std::move(edges));
}

}  // namespace

Graph icosahedron_graph() {
    return graph_from_rotation(family_tables::icosahedron_rotation);
}

Graph dodecahedron_graph() {
    return graph_from_rotation(family_tables::dodecahedron_rotation);
}

}  // namespace corrcount
