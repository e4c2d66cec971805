#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "corrcount/plane.hpp"

using namespace corrcount;

namespace {

int count_faces_of_length(const PlaneGraph& pg, int len) {
    int n = 0;
    for (const Face& f : pg.faces())
        if (f.length() == len) ++n;
    return n;
}

bool euler_holds(const PlaneGraph& pg) {
    int v = pg.graph().vertex_count();
    int e = pg.graph().edge_count();
    int f = static_cast<int>(pg.faces().size());
    return v - e + f == 2 * pg.graph().component_count();
}

}  // namespace

TEST_CASE("plane cycle: two faces of the full length") {
    PlaneGraph pg = plane_cycle(5);
    CHECK(pg.faces().size() == 2);
    CHECK(count_faces_of_length(pg, 5) == 2);
    CHECK(pg.outer_vertices() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(pg.interior_vertices().empty());
    CHECK(euler_holds(pg));

    PlaneGraph tri = plane_cycle(3);
    CHECK(tri.faces().size() == 2);
    CHECK(count_faces_of_length(tri, 3) == 2);
}

TEST_CASE("plane path: one face walking both sides") {
    PlaneGraph pg = plane_path(4);
    CHECK(pg.faces().size() == 1);
    CHECK(pg.outer_face().length() == 6);  // each of 3 edges has two sides
    CHECK(pg.outer_vertices() == std::vector<int>{0, 1, 2, 3});
    CHECK(euler_holds(pg));

    PlaneGraph single = plane_path(1);
    CHECK(single.faces().size() == 1);
    CHECK(single.outer_face().walk == std::vector<int>{0});
}

TEST_CASE("plane wheel: rim outside, triangles inside") {
    PlaneGraph pg = plane_wheel(5);
    CHECK(pg.faces().size() == 6);
    CHECK(count_faces_of_length(pg, 5) == 1);  // the rim
    CHECK(count_faces_of_length(pg, 3) == 5);  // the sectors
    CHECK(pg.outer_vertices() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(pg.interior_vertices() == std::vector<int>{5});
    CHECK(euler_holds(pg));
}

TEST_CASE("plane complete graphs cap at four vertices") {
    PlaneGraph k4 = plane_complete(4);
    CHECK(k4.faces().size() == 4);
    CHECK(count_faces_of_length(k4, 3) == 4);
    CHECK(euler_holds(k4));
    CHECK(plane_complete(3).faces().size() == 2);
    CHECK(plane_complete(1).faces().size() == 1);
    CHECK(plane_complete(2).faces().size() == 1);
    CHECK_THROWS_AS(plane_complete(5), PreconditionViolation);
}

TEST_CASE("plane grid: boundary walk plus unit squares") {
    PlaneGraph pg = plane_grid(2, 3);
    CHECK(pg.faces().size() == 3);
    CHECK(count_faces_of_length(pg, 4) == 2);
    CHECK(count_faces_of_length(pg, 6) == 1);
    CHECK(pg.outer_face().length() == 6);
    CHECK(pg.outer_vertices() == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(euler_holds(pg));

    PlaneGraph strip = plane_grid(1, 4);  // degenerates to a path
    CHECK(strip.faces().size() == 1);
}

TEST_CASE("platonic embeddings have the catalogued face counts") {
    PlaneGraph ico = plane_icosahedron();
    CHECK(ico.faces().size() == 20);
    CHECK(count_faces_of_length(ico, 3) == 20);
    CHECK(euler_holds(ico));

    PlaneGraph dod = plane_dodecahedron();
    CHECK(dod.faces().size() == 12);
    CHECK(count_faces_of_length(dod, 5) == 12);
    CHECK(euler_holds(dod));
}

TEST_CASE("face views deduplicate vertices and edges") {
    PlaneGraph pg = plane_path(2);
    REQUIRE(pg.faces().size() == 1);
    const Face& f = pg.faces()[0];
    CHECK(f.length() == 2);
    CHECK(f.vertex_set() == std::vector<int>{0, 1});
    CHECK(f.edge_set() == std::vector<Edge>{{0, 1}});

    PlaneGraph w = plane_wheel(4);
    CHECK(w.outer_face().vertex_set() == std::vector<int>{0, 1, 2, 3});
    CHECK(w.outer_edges() ==
          std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("rotation validation rejects malformed systems") {
    Graph c3 = cycle_graph(3);
    std::map<int, std::vector<int>> rot{{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1}}};

    SUBCASE("missing vertex") {
        std::map<int, std::vector<int>> bad{{0, {1, 2}}, {1, {0, 2}}};
        CHECK_THROWS_AS(PlaneGraph(c3, bad, {0, 1, 2}), PreconditionViolation);
    }
    SUBCASE("wrong neighbour list") {
        std::map<int, std::vector<int>> bad = rot;
        bad[0] = {1};
        CHECK_THROWS_AS(PlaneGraph(c3, bad, {0, 1, 2}), PreconditionViolation);
    }
    SUBCASE("repeated neighbour") {
        std::map<int, std::vector<int>> bad = rot;
        bad[0] = {1, 1};
        CHECK_THROWS_AS(PlaneGraph(c3, bad, {0, 1, 2}), PreconditionViolation);
    }
    SUBCASE("extra vertex in the rotation") {
        std::map<int, std::vector<int>> bad = rot;
        bad[7] = {};
        CHECK_THROWS_AS(PlaneGraph(c3, bad, {0, 1, 2}), PreconditionViolation);
    }
    SUBCASE("valid") { CHECK(PlaneGraph(c3, rot, {0, 1, 2}).faces().size() == 2); }
}

TEST_CASE("twisted rotations fail the Euler gate") {
    // K4 embedded as a 3-rim wheel, then the hub's cyclic order reversed at a
    // single vertex: the orbit structure changes genus and must be rejected.
    Graph k4 = complete_graph(4);
    std::map<int, std::vector<int>> rot{
        {0, {1, 3, 2}}, {1, {2, 3, 0}}, {2, {0, 3, 1}}, {3, {0, 1, 2}}};
    PlaneGraph good(k4, rot, {0, 1, 2});
    CHECK(good.faces().size() == 4);

    std::map<int, std::vector<int>> twisted = rot;
    twisted[3] = {0, 2, 1};
    CHECK_THROWS_AS(PlaneGraph(k4, twisted, {0, 1, 2}), PreconditionViolation);
}

TEST_CASE("the designated outer face must be a traced face") {
    Graph c5 = cycle_graph(5);
    std::map<int, std::vector<int>> rot;
    for (int i = 0; i < 5; ++i) rot[i] = {(i + 4) % 5, (i + 1) % 5};
    CHECK_THROWS_AS(PlaneGraph(c5, rot, {0, 2, 4}), PreconditionViolation);
    CHECK_THROWS_AS(PlaneGraph(c5, rot, {0, 1, 2}), PreconditionViolation);

    // Rotation and reversal of a genuine face walk are accepted.
    PlaneGraph rev(c5, rot, {3, 2, 1, 0, 4});
    CHECK(rev.outer_vertices() == std::vector<int>{0, 1, 2, 3, 4});
    PlaneGraph shifted(c5, rot, {2, 3, 4, 0, 1});
    CHECK(shifted.outer_vertices() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("re-rooting on another traced face keeps the embedding") {
    PlaneGraph w = plane_wheel(5);
    const Face* triangle = nullptr;
    for (const Face& f : w.faces())
        if (f.length() == 3) {
            triangle = &f;
            break;
        }
    REQUIRE(triangle != nullptr);
    PlaneGraph rerooted(w.graph(), w.rotation(), triangle->walk);
    CHECK(rerooted.faces().size() == w.faces().size());
    CHECK(rerooted.outer_face().length() == 3);
    // The hub joins the outer face; the three far rim vertices move inside.
    CHECK(rerooted.interior_vertices().size() == 3);
}

TEST_CASE("isolated vertices and disconnected embeddings") {
    PlaneGraph lone(Graph({0}, {}), {{0, {}}}, {0});
    CHECK(lone.faces().size() == 1);
    CHECK(euler_holds(lone));

    Graph two({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    std::map<int, std::vector<int>> rot{{0, {1}}, {1, {0}}, {2, {3}}, {3, {2}}};
    PlaneGraph pg(two, rot, {0, 1});
    CHECK(pg.faces().size() == 2);
    CHECK(euler_holds(pg));
}

TEST_CASE("induced sub-embedding restricts rotations") {
    PlaneGraph w = plane_wheel(5);

    SUBCASE("dropping the hub leaves the rim cycle") {
        PlaneGraph rim = w.induced_subembedding({0, 1, 2, 3, 4});
        CHECK(rim.graph() == cycle_graph(5));
        CHECK(rim.faces().size() == 2);
        CHECK(rim.outer_face().length() == 5);
    }
    SUBCASE("a fan with an outer hint") {
        PlaneGraph fan = w.induced_subembedding({0, 1, 2, 5}, {0, 2});
        CHECK(fan.graph().vertex_count() == 4);
        CHECK(fan.graph().edge_count() == 5);
        CHECK(fan.faces().size() == 3);
        CHECK(fan.outer_face().length() == 4);
        auto ov = fan.outer_vertices();
        CHECK(std::binary_search(ov.begin(), ov.end(), 0));
        CHECK(std::binary_search(ov.begin(), ov.end(), 2));
    }
    SUBCASE("hint that no face contains is rejected") {
        CHECK_THROWS_AS(w.induced_subembedding({0, 1, 2}, {0, 5}),
                        PreconditionViolation);
    }
    SUBCASE("empty subset is rejected") {
        CHECK_THROWS_AS(w.induced_subembedding({}), PreconditionViolation);
    }
    SUBCASE("single vertex works") {
        PlaneGraph dot = w.induced_subembedding({5});
        CHECK(dot.graph().vertex_count() == 1);
        CHECK(dot.faces().size() == 1);
    }
}
