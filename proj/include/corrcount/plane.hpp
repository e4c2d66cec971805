#pragma once

// Plane graphs: a combinatorial embedding (rotation system) with a designated
// outer face.  Faces are traced at construction and every embedding must pass
// the Euler check v - e + f = 2 per connected component; rotation data that
// fails it is rejected.  No planarity testing is performed on abstract graphs.

#include <map>
#include <vector>

#include "corrcount/graph.hpp"

namespace corrcount {

// A face as its closed boundary walk (vertex sequence; length = edge sides).
struct Face {
    std::vector<int> walk;
    int length() const { return static_cast<int>(walk.size()); }
    std::vector<int> vertex_set() const;  // sorted, deduplicated
    std::vector<Edge> edge_set() const;   // sorted, deduplicated
};

class PlaneGraph {
  public:
    // rotation: for every vertex, its incident neighbours in cyclic order.
    // outer_face: a closed walk that must match one traced face up to
    // rotation/reflection.
    PlaneGraph(Graph graph, std::map<int, std::vector<int>> rotation,
               std::vector<int> outer_face);

    const Graph& graph() const { return graph_; }
    const std::map<int, std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& outer_face() const { return faces_[outer_index_]; }
    int outer_face_index() const { return outer_index_; }

    // Vertices/edges of the outer walk, as sorted sets.
    std::vector<int> outer_vertices() const { return outer_face().vertex_set(); }
    std::vector<Edge> outer_edges() const { return outer_face().edge_set(); }
    std::vector<int> interior_vertices() const;

    // The sub-embedding induced on a vertex subset (rotations restricted).
    // The outer face is chosen as a traced face whose vertex set contains
    // `outer_hint` (all of it); with an empty hint, a face of maximum length.
    PlaneGraph induced_subembedding(const std::vector<int>& vertex_subset,
                                    const std::vector<int>& outer_hint = {}) const;

  private:
    Graph graph_;
    std::map<int, std::vector<int>> rotation_;
    std::vector<Face> faces_;
    int outer_index_ = 0;
};

// Built-in plane families, embedded with the natural outer face.
PlaneGraph plane_cycle(int n);       // outer face = the cycle
PlaneGraph plane_path(int n);        // single face
PlaneGraph plane_wheel(int n);       // outer face = rim 0..n-1, hub n inside
PlaneGraph plane_complete(int n);    // n <= 4
PlaneGraph plane_grid(int m, int n); // outer face = boundary
PlaneGraph plane_icosahedron();
PlaneGraph plane_dodecahedron();

}  // namespace corrcount
