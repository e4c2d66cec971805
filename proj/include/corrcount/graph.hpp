#pragma once

// Simple undirected graphs with small non-negative integer vertex ids,
// immutable after construction, plus subgraph references, girth machinery,
// built-in families and the graph6 codec.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrcount/exact.hpp"

namespace corrcount {

using Edge = std::pair<int, int>;  // stored normalized: first < second

inline Edge make_edge(int u, int v) {
    if (u == v) throw PreconditionViolation("loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
  public:
    // Vertex-count cap; construction beyond it is rejected.
    static int max_vertices();
    static void set_max_vertices(int cap);

    Graph() = default;
    Graph(std::vector<int> vertices, std::vector<Edge> edges);

    static Graph from_edges(const std::vector<Edge>& edges);
    static Graph from_graph6(const std::string& line);
    std::string to_graph6() const;  // requires ids 0..n-1

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    bool is_connected() const;
    int component_count() const;

    bool operator==(const Graph& other) const {
        return verts_ == other.verts_ && edges_ == other.edges_;
    }

  private:
    std::vector<int> verts_;                 // sorted unique
    std::vector<Edge> edges_;                // sorted normalized
    std::map<int, std::vector<int>> adj_;    // sorted neighbour lists
};

// Reference to a subgraph of a parent graph: a vertex subset plus an edge
// subset drawn from the parent.  `induced` asserts the edge subset is exactly
// the parent's edges inside the vertex subset; checked at construction.
class SubgraphRef {
  public:
    SubgraphRef(const Graph& parent, std::vector<int> vertex_subset,
                std::vector<Edge> edge_subset, bool induced);

    static SubgraphRef induced(const Graph& parent, std::vector<int> vertex_subset);
    static SubgraphRef of(const Graph& parent, std::vector<int> vertex_subset,
                          std::vector<Edge> edge_subset);
    static SubgraphRef whole(const Graph& parent);

    const Graph& parent() const { return parent_; }
    const std::vector<int>& vertex_subset() const { return verts_; }
    const std::vector<Edge>& edge_subset() const { return edges_; }
    bool is_induced() const { return induced_; }
    bool has_vertex(int v) const;
    bool has_edge(const Edge& e) const;
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // The subgraph as a standalone graph.
    Graph materialize() const;

  private:
    Graph parent_;
    std::vector<int> verts_;
    std::vector<Edge> edges_;
    bool induced_ = false;
};

// Positive-integer-or-infinity; the sentinel orders above every integer.
class GirthValue {
  public:
    static GirthValue finite(int v) { return GirthValue(v); }
    static GirthValue infinite() { return GirthValue(); }
    bool is_infinite() const { return !value_.has_value(); }
    int value() const {
        if (is_infinite()) throw PreconditionViolation("girth value is infinite");
        return *value_;
    }
    bool operator==(const GirthValue& o) const { return value_ == o.value_; }
    bool operator<(const GirthValue& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return *value_ < *o.value_;
    }
    bool operator<=(const GirthValue& o) const { return *this < o || *this == o; }
    bool operator>=(const GirthValue& o) const { return !(*this < o); }
    std::string to_string() const {
        return is_infinite() ? "infinity" : std::to_string(*value_);
    }

  private:
    GirthValue() = default;
    explicit GirthValue(int v) : value_(v) {
        if (v < 3) throw PreconditionViolation("girth below 3");
    }
    std::optional<int> value_;
};

// Length of a shortest cycle in g / through edge e / through vertex v.
GirthValue girth(const Graph& g);
GirthValue edge_girth(const Graph& g, const Edge& e);
GirthValue vertex_girth(const Graph& g, int v);

// (v(g)-v(h), e(g)-e(h)); h must be a subgraph of g.
std::pair<int, int> diff_counts(const Graph& g, const SubgraphRef& h);

bool is_independent(const Graph& g, const std::vector<int>& vertices);
std::vector<int> neighbours_in(const Graph& g, int v, const std::vector<int>& subset);

// Built-in families.  wheel(n) is an n-vertex rim cycle 0..n-1 plus hub n.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int m, int n);
Graph icosahedron_graph();
Graph dodecahedron_graph();

}  // namespace corrcount
