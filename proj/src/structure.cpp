#include "corrcount/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

namespace corrcount {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw PreconditionViolation(msg);
}

void require_subgraph_of(const Graph& g, const SubgraphRef& s,
                         const std::string& label) {
    for (int v : s.vertex_subset())
        require(g.has_vertex(v),
                label + " vertex " + std::to_string(v) + " is not in the graph");
    for (const Edge& e : s.edge_subset())
        require(g.has_edge(e.first, e.second),
                label + " edge {" + std::to_string(e.first) + "," +
                    std::to_string(e.second) + "} is not in the graph");
}

void require_induced(const Graph& g, const SubgraphRef& h) {
    for (const Edge& e : g.edges()) {
        if (!h.has_vertex(e.first) || !h.has_vertex(e.second)) continue;
        require(h.has_edge(e),
                "subgraph must be induced; missing edge {" +
                    std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    }
}

void require_clean_assignment(const Graph& g, const CorrespondenceAssignment& a,
                              const std::string& label) {
    auto violations = validate(g, a);
    if (!violations.empty())
        throw PreconditionViolation(label + " assignment invalid: " +
                                    violations.front().detail);
}

// --- adversary assignment space for deletability ------------------------------

void gen_injections(int arity, int target, std::vector<int>& cur,
                    std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == arity) {
        out.push_back(cur);
        return;
    }
    for (int i = 0; i < target; ++i) {
        if (used[i]) continue;
        used[i] = true;
        cur.push_back(i);
        gen_injections(arity, target, cur, used, out);
        cur.pop_back();
        used[i] = false;
    }
}

struct AdversarySpace {
    Graph hg = Graph({}, {});
    std::map<int, std::vector<Colour>> lists;  // canonical {0..n_u-1}
    struct EdgeSlot {
        Edge e{0, 1};
        bool first_is_small = true;
        std::vector<std::vector<int>> injections;
    };
    std::vector<EdgeSlot> slots;
    BigInt total = 1;  // product of per-edge injection counts
};

AdversarySpace build_space(const Graph& g, const SubgraphRef& h, int r) {
    AdversarySpace sp;
    sp.hg = h.materialize();
    for (int u : sp.hg.vertices()) {
        int n = r - (g.degree(u) - sp.hg.degree(u));
        if (n < 0) n = 0;
        std::vector<Colour> list(n);
        std::iota(list.begin(), list.end(), 0);
        sp.lists[u] = std::move(list);
    }
    for (const Edge& e : sp.hg.edges()) {
        AdversarySpace::EdgeSlot slot;
        slot.e = e;
        int nu = static_cast<int>(sp.lists.at(e.first).size());
        int nv = static_cast<int>(sp.lists.at(e.second).size());
        slot.first_is_small = nu <= nv;
        int arity = std::min(nu, nv);
        int target = std::max(nu, nv);
        std::vector<int> cur;
        std::vector<bool> used(target, false);
        gen_injections(arity, target, cur, used, slot.injections);
        sp.total *= static_cast<unsigned long>(slot.injections.size());
        sp.slots.push_back(std::move(slot));
    }
    return sp;
}

CorrespondenceAssignment assignment_at(const AdversarySpace& sp,
                                       const std::vector<size_t>& idx) {
    std::map<Edge, std::vector<ColourPair>> match;
    for (size_t i = 0; i < sp.slots.size(); ++i) {
        const auto& slot = sp.slots[i];
        const auto& inj = slot.injections[idx[i]];
        std::vector<ColourPair> pairs;
        for (int k = 0; k < static_cast<int>(inj.size()); ++k) {
            if (slot.first_is_small)
                pairs.push_back({k, inj[k]});
            else
                pairs.push_back({inj[k], k});
        }
        std::sort(pairs.begin(), pairs.end());
        match[slot.e] = std::move(pairs);
    }
    return CorrespondenceAssignment(sp.lists, std::move(match));
}

enum class OneCheck { enough, defeated, undecided };

OneCheck check_one(const Graph& hg, const CorrespondenceAssignment& a,
                   const BigInt& needed, std::uint64_t node_budget) {
    try {
        return has_at_least(hg, a, needed, node_budget) ? OneCheck::enough
                                                        : OneCheck::defeated;
    } catch (const BudgetExceeded&) {
        return OneCheck::undecided;
    }
}

DeletabilityVerdict decide_deletable(const Graph& g, const SubgraphRef& h, int r,
                                     const BigInt& needed,
                                     const BigInt& assignment_budget,
                                     std::uint64_t node_budget,
                                     std::uint64_t falsification_samples,
                                     std::uint64_t seed) {
    require(h.vertex_count() >= 1, "the subgraph must be nonempty");
    require_subgraph_of(g, h, "subgraph");
    require_induced(g, h);

    AdversarySpace sp = build_space(g, h, r);
    DeletabilityVerdict verdict;
    std::vector<size_t> idx(sp.slots.size(), 0);

    if (sp.total <= assignment_budget) {
        while (true) {
            auto a = assignment_at(sp, idx);
            verdict.checked_assignments += 1;
            switch (check_one(sp.hg, a, needed, node_budget)) {
                case OneCheck::defeated:
                    verdict.status = DeletabilityStatus::not_deletable;
                    verdict.witness = std::move(a);
                    return verdict;
                case OneCheck::undecided:
                    verdict.status = DeletabilityStatus::unknown_budget;
                    return verdict;
                case OneCheck::enough:
                    break;
            }
            // advance the odometer
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < sp.slots[pos].injections.size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;  // wrapped: space exhausted
        }
        verdict.status = DeletabilityStatus::deletable;
        return verdict;
    }

    // Space too large for exact enumeration: randomized falsification only.
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < falsification_samples; ++t) {
        for (size_t i = 0; i < idx.size(); ++i) {
            std::uniform_int_distribution<size_t> pick(
                0, sp.slots[i].injections.size() - 1);
            idx[i] = pick(rng);
        }
        auto a = assignment_at(sp, idx);
        verdict.checked_assignments += 1;
        switch (check_one(sp.hg, a, needed, node_budget)) {
            case OneCheck::defeated:
                verdict.status = DeletabilityStatus::not_deletable;
                verdict.witness = std::move(a);
                return verdict;
            case OneCheck::undecided:
                verdict.status = DeletabilityStatus::unknown_budget;
                return verdict;
            case OneCheck::enough:
                break;
        }
    }
    verdict.status = DeletabilityStatus::unknown_budget;
    return verdict;
}

}  // namespace

Rational default_epsilon(int g_param) {
    if (g_param == 3) return Rational(1, 50);
    if (g_param == 5) return Rational(1, 88);
    return Rational(0);
}

DeficiencyReport deficiency(const Graph& g, const SubgraphRef& h, int g_param,
                            const std::optional<Rational>& epsilon) {
    require(g_param >= 3, "the girth parameter must be at least 3");
    auto [v_diff, e_diff] = diff_counts(g, h);
    DeficiencyReport rep;
    rep.g_param = g_param;
    rep.v_diff = v_diff;
    rep.e_diff = e_diff;
    rep.def_g = static_cast<long long>(g_param - 2) * e_diff -
                static_cast<long long>(g_param) * v_diff;
    rep.epsilon = epsilon ? *epsilon : default_epsilon(g_param);
    Rational d = Rational(static_cast<long>(rep.def_g)) - rep.epsilon * v_diff;
    rep.d_scaled_sign = sgn(d);
    return rep;
}

bool d_ge_check(const Graph& g, const SubgraphRef& h, int g_param,
                const Rational& epsilon, const Rational& threshold) {
    require(g_param >= 3, "the girth parameter must be at least 3");
    auto [v_diff, e_diff] = diff_counts(g, h);
    long long def_g = static_cast<long long>(g_param - 2) * e_diff -
                      static_cast<long long>(g_param) * v_diff;
    Rational d = Rational(static_cast<long>(def_g)) - epsilon * v_diff;
    return d >= threshold;
}

DeletabilityVerdict is_deletable(const Graph& g, const SubgraphRef& h, int r,
                                 const BigInt& assignment_budget,
                                 std::uint64_t node_budget,
                                 std::uint64_t falsification_samples,
                                 std::uint64_t seed) {
    return decide_deletable(g, h, r, BigInt(1), assignment_budget, node_budget,
                            falsification_samples, seed);
}

DeletabilityVerdict is_exponentially_deletable(const Graph& g, const SubgraphRef& h,
                                               int r, const Rational& epsilon,
                                               const BigInt& assignment_budget,
                                               std::uint64_t node_budget,
                                               std::uint64_t falsification_samples,
                                               std::uint64_t seed) {
    require(epsilon >= 0, "epsilon must be nonnegative");
    Rational exponent = epsilon * h.vertex_count();
    require(exponent.get_num().fits_ulong_p() && exponent.get_den().fits_ulong_p(),
            "exponent out of range");
    BigInt needed = ceil_power_root(BigInt(2), exponent.get_num().get_ui(),
                                    exponent.get_den().get_ui());
    return decide_deletable(g, h, r, needed, assignment_budget, node_budget,
                            falsification_samples, seed);
}

CriticalityResult is_critical(const Graph& g, const SubgraphRef& s,
                              const CorrespondenceAssignment& a,
                              const BigInt& colouring_budget,
                              std::uint64_t node_budget) {
    require_subgraph_of(g, s, "precoloured");
    require(s.vertex_count() < g.vertex_count() || s.edge_count() < g.edge_count(),
            "the precoloured subgraph must be proper");
    require_clean_assignment(g, a, "criticality");

    Graph sg = s.materialize();
    auto sa = a.restricted_to(s.vertex_subset(), s.edge_subset());
    auto base = count_colourings(sg, sa, node_budget);
    if (base.truncated)
        throw BudgetExceeded("node budget hit while counting subgraph colourings");
    if (base.count > colouring_budget)
        throw BudgetExceeded("subgraph admits more colourings than the budget: " +
                             base.count.get_str());
    auto phis = enumerate_colourings(sg, sa, 0, node_budget);

    std::vector<SubgraphDeletion> deletions;
    for (const Edge& e : g.edges())
        if (!s.has_edge(e)) deletions.push_back({e, std::nullopt});
    for (int v : g.vertices())
        if (!s.has_vertex(v)) deletions.push_back({std::nullopt, v});

    std::map<PartialColouring, bool> extends_to_g;
    auto reaches_g = [&](const PartialColouring& phi) {
        auto it = extends_to_g.find(phi);
        if (it != extends_to_g.end()) return it->second;
        bool value = find_extension(g, a, phi, node_budget).has_value();
        extends_to_g.emplace(phi, value);
        return value;
    };

    CriticalityResult res;
    for (const auto& del : deletions) {
        Graph reduced({}, {});
        CorrespondenceAssignment ra({}, {});
        if (del.edge) {
            std::vector<Edge> edges;
            for (const Edge& e : g.edges())
                if (e != *del.edge) edges.push_back(e);
            reduced = Graph(g.vertices(), edges);
            ra = a.restricted_to(g.vertices(), edges);
        } else {
            std::vector<int> verts;
            for (int v : g.vertices())
                if (v != *del.vertex) verts.push_back(v);
            std::vector<Edge> edges;
            for (const Edge& e : g.edges())
                if (e.first != *del.vertex && e.second != *del.vertex)
                    edges.push_back(e);
            reduced = Graph(verts, edges);
            ra = a.restricted_to(verts, edges);
        }
        bool witnessed = false;
        for (const auto& phi : phis) {
            if (!find_extension(reduced, ra, phi, node_budget)) continue;
            if (reaches_g(phi)) continue;
            res.certificate.push_back({del, phi});
            witnessed = true;
            break;
        }
        if (!witnessed) {
            res.critical = false;
            res.failing = del;
            res.certificate.clear();
            return res;
        }
    }
    res.critical = true;
    return res;
}

DeletableSearchResult deletable_subgraph_search(const Graph& g, const SubgraphRef& h,
                                                int r,
                                                const BigInt& assignment_budget,
                                                std::uint64_t node_budget) {
    require_subgraph_of(g, h, "subgraph");
    std::vector<int> outside;
    for (int v : g.vertices())
        if (!h.has_vertex(v)) outside.push_back(v);

    DeletableSearchResult res;
    BigInt remaining = assignment_budget;
    int n = static_cast<int>(outside.size());
    for (int size = 1; size <= n; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> x;
            x.reserve(size);
            for (int i : pick) x.push_back(outside[i]);
            auto xref = SubgraphRef::induced(g, x);
            if (xref.materialize().is_connected()) {
                if (remaining <= 0) {
                    res.exhaustive = false;
                    return res;
                }
                auto verdict = is_deletable(g, xref, r, remaining, node_budget);
                res.checked_assignments += verdict.checked_assignments;
                remaining -= verdict.checked_assignments;
                if (verdict.status == DeletabilityStatus::deletable) {
                    res.x = std::move(x);
                    return res;
                }
                if (verdict.status == DeletabilityStatus::unknown_budget)
                    res.exhaustive = false;
            }
            // next combination of `size` indices in lexicographic order
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return res;
}

CheegerVerdict cheeger_disk_check(const PlaneGraph& pg,
                                  const std::vector<int>& boundary,
                                  const Rational& c) {
    require(c >= 0, "the constant must be nonnegative");
    std::vector<int> b = boundary;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    auto ov = pg.outer_vertices();
    require(b == ov, "boundary must be the vertex set of the outer walk");

    CheegerVerdict out;
    out.boundary_count = static_cast<int>(ov.size());
    out.interior_count = pg.graph().vertex_count() - out.boundary_count;
    out.c = c;
    if (out.interior_count == 0) {
        out.vacuous = true;
        out.holds = true;
        return out;
    }
    out.holds = Rational(out.interior_count) <= c * Rational(out.boundary_count - 1);
    return out;
}

}  // namespace corrcount
