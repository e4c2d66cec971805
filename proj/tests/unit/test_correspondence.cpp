#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "corrcount/correspondence.hpp"

using namespace corrcount;

namespace {

std::multiset<Violation::Kind> kinds(const std::vector<Violation>& vs) {
    std::multiset<Violation::Kind> out;
    for (const auto& v : vs) out.insert(v.kind);
    return out;
}

}  // namespace

TEST_CASE("assignments canonicalize their data") {
    CorrespondenceAssignment a({{0, {2, 1, 2}}, {1, {0}}},
                               {{{0, 1}, {{1, 0}, {1, 0}, {2, 0}}}});
    CHECK(a.list_at(0) == std::vector<Colour>{1, 2});
    CHECK(a.list_at(1) == std::vector<Colour>{0});
    CHECK(a.matching_at({1, 0}) == std::vector<ColourPair>{{1, 0}, {2, 0}});
    CHECK(a.matching_at({0, 1}) == std::vector<ColourPair>{{1, 0}, {2, 0}});
    CHECK(a.max_colour() == 2);
    CHECK_FALSE(a.declared_k().has_value());
    CHECK(a.has_list(0));
    CHECK_FALSE(a.has_list(9));
    CHECK_THROWS_AS(a.list_at(9), PreconditionViolation);
    // Unknown edges read as empty matchings.
    CHECK(a.matching_at({5, 6}).empty());
    // Matching keys must be normalized edges.
    CHECK_THROWS_AS(CorrespondenceAssignment({}, {{{1, 0}, {}}}),
                    PreconditionViolation);
    CHECK_THROWS_AS(CorrespondenceAssignment({}, {{{1, 1}, {}}}),
                    PreconditionViolation);

    CorrespondenceAssignment empty({}, {});
    CHECK(empty.max_colour() == -1);
}

TEST_CASE("validate reports each violation kind") {
    Graph p3 = path_graph(3);  // edges {0,1},{1,2}
    using K = Violation::Kind;

    SUBCASE("clean identity instance") {
        auto a = from_lists(p3, {{0, {0, 1}}, {1, {0, 1}}, {2, {0, 1}}});
        CHECK(validate(p3, a).empty());
    }
    SUBCASE("missing list and missing matching") {
        CorrespondenceAssignment a({{0, {0}}, {1, {0}}}, {{{0, 1}, {}}});
        auto ks = kinds(validate(p3, a));
        CHECK(ks.count(K::missing_list) == 1);      // vertex 2
        CHECK(ks.count(K::missing_matching) == 1);  // edge {1,2}
    }
    SUBCASE("unknown vertex and unknown edge") {
        CorrespondenceAssignment a(
            {{0, {0}}, {1, {0}}, {2, {0}}, {7, {0}}},
            {{{0, 1}, {}}, {{1, 2}, {}}, {{0, 2}, {}}});
        auto ks = kinds(validate(p3, a));
        CHECK(ks.count(K::unknown_vertex) == 1);  // list for 7
        CHECK(ks.count(K::unknown_edge) == 1);    // matching on non-edge {0,2}
    }
    SUBCASE("colour outside list") {
        CorrespondenceAssignment a({{0, {0}}, {1, {0}}, {2, {0}}},
                                   {{{0, 1}, {{0, 5}}}, {{1, 2}, {}}});
        CHECK(kinds(validate(p3, a)).count(K::colour_outside_list) == 1);
    }
    SUBCASE("repeated colour breaks the matching property") {
        CorrespondenceAssignment a({{0, {0, 1}}, {1, {0, 1}}, {2, {0}}},
                                   {{{0, 1}, {{0, 0}, {0, 1}}}, {{1, 2}, {}}});
        CHECK(kinds(validate(p3, a)).count(K::not_a_matching) == 1);
        CorrespondenceAssignment b({{0, {0, 1}}, {1, {0, 1}}, {2, {0}}},
                                   {{{0, 1}, {{0, 0}, {1, 0}}}, {{1, 2}, {}}});
        CHECK(kinds(validate(p3, b)).count(K::not_a_matching) == 1);
    }
    SUBCASE("declared k is checked against every list") {
        CorrespondenceAssignment a({{0, {0, 1}}, {1, {0}}, {2, {0, 1}}},
                                   {{{0, 1}, {}}, {{1, 2}, {}}}, 2);
        auto ks = kinds(validate(p3, a));
        CHECK(ks.count(K::list_below_declared_k) == 1);
        CHECK(violation_to_string(validate(p3, a).front()).size() > 0);
    }
}

TEST_CASE("colouring validity respects lists, matchings, and partiality") {
    Graph k2 = path_graph(2);
    auto a = from_lists(k2, {{0, {0, 1}}, {1, {0, 1}}});
    CHECK(is_valid_colouring(k2, a, {{0, 0}, {1, 1}}));
    CHECK_FALSE(is_valid_colouring(k2, a, {{0, 0}, {1, 0}}));  // identity pair
    CHECK(is_valid_colouring(k2, a, {{0, 0}}));                // edge unconstrained
    CHECK(is_valid_colouring(k2, a, {}));
    CHECK_FALSE(is_valid_colouring(k2, a, {{0, 7}}));          // outside the list
    CHECK_FALSE(is_valid_colouring(k2, a, {{9, 0}}));          // unknown vertex

    // A non-identity matching: (0 at u) conflicts with (1 at v).
    CorrespondenceAssignment twisted({{0, {0, 1}}, {1, {0, 1}}},
                                     {{{0, 1}, {{0, 1}, {1, 0}}}});
    CHECK(is_valid_colouring(k2, twisted, {{0, 0}, {1, 0}}));
    CHECK_FALSE(is_valid_colouring(k2, twisted, {{0, 0}, {1, 1}}));
}

TEST_CASE("from_lists builds identity matchings on shared colours") {
    Graph k2 = path_graph(2);
    auto a = from_lists(k2, {{0, {0, 1}}, {1, {1, 2}}});
    CHECK(a.matching_at({0, 1}) == std::vector<ColourPair>{{1, 1}});
    CHECK_THROWS_AS(from_lists(k2, {{0, {0}}}), PreconditionViolation);
}

TEST_CASE("restriction keeps the requested vertices and edges") {
    Graph c3 = cycle_graph(3);
    auto a = from_lists(c3, {{0, {0, 1}}, {1, {0, 1}}, {2, {0, 1}}});
    auto r = a.restricted_to({0, 1}, {{0, 1}});
    CHECK(r.lists().size() == 2);
    CHECK(r.matchings().size() == 1);
    CHECK(r.matching_at({0, 1}) == std::vector<ColourPair>{{0, 0}, {1, 1}});
    CHECK_FALSE(r.has_list(2));
}

TEST_CASE("permutation space: totals, indexing, and iteration order") {
    Graph p3 = path_graph(3);
    PermutationAssignments space(p3, 2);
    CHECK(space.total() == 4);  // (2!)^2

    std::vector<CorrespondenceAssignment> seen;
    space.for_each(100, [&](const CorrespondenceAssignment& a) {
        seen.push_back(a);
        return true;
    });
    REQUIRE(seen.size() == 4);
    for (size_t i = 0; i < seen.size(); ++i) {
        auto direct = space.at(BigInt(static_cast<long>(i)));
        CHECK(direct.lists() == seen[i].lists());
        CHECK(direct.matchings() == seen[i].matchings());
    }
    // Index 0 carries identity permutations on every edge.
    CHECK(space.at(0).matching_at({0, 1}) ==
          std::vector<ColourPair>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(space.at(4), PreconditionViolation);
    CHECK_THROWS_AS(space.at(-1), PreconditionViolation);

    // Every member validates against the graph with declared k.
    for (const auto& a : seen) {
        CHECK(*a.declared_k() == 2);
        CHECK(validate(p3, a).empty());
    }

    CHECK(PermutationAssignments(cycle_graph(3), 2).total() == 8);
    CHECK_THROWS_AS(PermutationAssignments(p3, 0), PreconditionViolation);
}

TEST_CASE("permutation space: budget guard and seeded sampling") {
    Graph c3 = cycle_graph(3);
    PermutationAssignments space(c3, 5);
    CHECK(space.total() == BigInt(120) * 120 * 120);
    CHECK_THROWS_AS(space.for_each(1000000, [](const auto&) { return true; }),
                    BudgetExceeded);

    std::mt19937_64 rng1(42), rng2(42), rng3(7);
    auto a1 = space.sample(rng1);
    auto a2 = space.sample(rng2);
    CHECK(a1.matchings() == a2.matchings());  // same seed, same assignment
    CHECK(validate(c3, a1).empty());
    // A different seed is allowed to differ (and does for this seed pair).
    auto a3 = space.sample(rng3);
    CHECK(a1.matchings() != a3.matchings());
}

TEST_CASE("precolouring gadget with default outside lists") {
    Graph w5 = wheel_graph(5);
    auto [a, forced] = precolouring_gadget(w5, SubgraphRef::induced(w5, {5}), 5);

    // Hub: one private colour plus four shared colours.
    CHECK(forced == PartialColouring{{5, 5}});
    CHECK(a.list_at(5) == std::vector<Colour>{5, 6, 7, 8, 9});
    // Rim vertices: deficit 5-1 = 4 default colours, plus the hub's private
    // colour added by the spoke matching.
    for (int i = 0; i < 5; ++i)
        CHECK(a.list_at(i) == std::vector<Colour>{0, 1, 2, 3, 5});
    for (int i = 0; i < 5; ++i)
        CHECK(a.matching_at({i, 5}) == std::vector<ColourPair>{{5, 5}});
    CHECK(a.matching_at({0, 1}).empty());
    CHECK(validate(w5, a).empty());
    CHECK(is_valid_colouring(w5, a, forced));
}

TEST_CASE("precolouring gadget accepts an explicit challenge base") {
    Graph k2 = path_graph(2);
    CorrespondenceAssignment base({{0, {7}}}, {});
    auto [a, forced] = precolouring_gadget(k2, SubgraphRef::induced(k2, {1}), 1, base);
    CHECK(forced == PartialColouring{{1, 8}});  // fresh above the base maximum
    CHECK(a.list_at(1) == std::vector<Colour>{8});
    CHECK(a.list_at(0) == std::vector<Colour>{7, 8});
    CHECK(a.matching_at({0, 1}) == std::vector<ColourPair>{{8, 8}});
    CHECK(validate(k2, a).empty());

    SUBCASE("base covering a gadget vertex is rejected") {
        CorrespondenceAssignment bad({{0, {7}}, {1, {3}}}, {});
        CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::induced(k2, {1}), 1, bad),
                        PreconditionViolation);
    }
    SUBCASE("base mentioning an edge into the subgraph is rejected") {
        CorrespondenceAssignment bad({{0, {7}}}, {{{0, 1}, {}}});
        CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::induced(k2, {1}), 1, bad),
                        PreconditionViolation);
    }
    SUBCASE("base missing an outside vertex is rejected") {
        CorrespondenceAssignment bad({}, {});
        CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::induced(k2, {1}), 1, bad),
                        PreconditionViolation);
    }
}

TEST_CASE("precolouring gadget validates its shape inputs") {
    Graph k2 = path_graph(2);
    CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::induced(k2, {1}), 0),
                    PreconditionViolation);
    CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::of(k2, {}, {}), 1),
                    PreconditionViolation);
    CHECK_THROWS_AS(precolouring_gadget(k2, SubgraphRef::whole(k2), 1),
                    PreconditionViolation);
}

TEST_CASE("girth-driven lists size by local cycle structure") {
    auto a = local_girth_lists(complete_graph(4));
    for (int v = 0; v < 4; ++v) CHECK(a.list_at(v).size() == 5);

    auto b = local_girth_lists(cycle_graph(4));
    for (int v = 0; v < 4; ++v) CHECK(b.list_at(v).size() == 4);

    auto c = local_girth_lists(cycle_graph(5));
    for (int v = 0; v < 5; ++v) CHECK(c.list_at(v).size() == 3);

    auto d = local_girth_lists(path_graph(4));  // acyclic: treated as girth >= 5
    for (int v = 0; v < 4; ++v) CHECK(d.list_at(v).size() == 3);

    // Mixed: a triangle with a pendant tail.
    Graph tailed({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto e = local_girth_lists(tailed);
    CHECK(e.list_at(0).size() == 5);
    CHECK(e.list_at(1).size() == 5);
    CHECK(e.list_at(2).size() == 5);
    CHECK(e.list_at(3).size() == 3);
    // Identity matchings pair the shared prefix.
    CHECK(e.matching_at({2, 3}).size() == 3);
    CHECK(e.matching_at({0, 1}).size() == 5);

    // The embedded overload delegates to the abstract graph.
    auto f = local_girth_lists(plane_wheel(5));
    for (int v = 0; v <= 5; ++v) CHECK(f.list_at(v).size() == 5);
    CHECK(validate(wheel_graph(5), f).empty());
}
