#include "corrcount/counting.hpp"

#include <algorithm>
#include <limits>

namespace corrcount {

namespace {

// Flat search instance: vertices re-indexed 0..n-1, colours re-indexed per
// vertex by list position, per-dart tables mapping a colour index at one end
// to the forbidden colour index at the other (-1 when unmatched).
struct Compiled {
    int n = 0;
    std::vector<int> ids;                        // dense index -> vertex id
    std::vector<std::vector<Colour>> colours;    // dense index -> sorted list
    std::vector<std::vector<int>> adj;           // dense adjacency
    // forbid[v][w-slot][c] = colour index forbidden at w when v takes c
    std::vector<std::vector<std::vector<int>>> forbid;

    static Compiled build(const Graph& g, const CorrespondenceAssignment& a) {
        auto violations = validate(g, a);
        if (!violations.empty())
            throw PreconditionViolation("invalid assignment: " +
                                        violations.front().detail);
        Compiled c;
        c.n = g.vertex_count();
        c.ids = g.vertices();
        std::map<int, int> dense;
        for (int i = 0; i < c.n; ++i) dense[c.ids[i]] = i;
        c.colours.resize(c.n);
        for (int i = 0; i < c.n; ++i) {
            c.colours[i] = a.list_at(c.ids[i]);
            if (c.colours[i].size() > 64)
                throw PreconditionViolation("colour list longer than 64 entries");
        }
        c.adj.resize(c.n);
        c.forbid.resize(c.n);
        for (const auto& e : g.edges()) {
            int u = dense[e.first], v = dense[e.second];
            const auto& pairs = a.matching_at(e);
            auto index_of = [](const std::vector<Colour>& list, Colour col) {
                auto it = std::lower_bound(list.begin(), list.end(), col);
                return static_cast<int>(it - list.begin());
            };
            std::vector<int> u_to_v(c.colours[u].size(), -1);
            std::vector<int> v_to_u(c.colours[v].size(), -1);
            for (const auto& [cu, cv] : pairs) {
                u_to_v[index_of(c.colours[u], cu)] = index_of(c.colours[v], cv);
                v_to_u[index_of(c.colours[v], cv)] = index_of(c.colours[u], cu);
            }
            c.adj[u].push_back(v);
            c.forbid[u].push_back(std::move(u_to_v));
            c.adj[v].push_back(u);
            c.forbid[v].push_back(std::move(v_to_u));
        }
        return c;
    }
};

struct SearchState {
    const Compiled& ins;
    std::vector<std::uint64_t> domain;  // bitmask of available colour indices
    std::vector<int> assigned;          // colour index or -1
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool truncated = false;
    bool lexicographic = false;
    BigInt found = 0;
    std::optional<BigInt> stop_at;      // stop once found reaches this
    const std::function<bool(const PartialColouring&)>* sink = nullptr;
    bool sink_stopped = false;

    explicit SearchState(const Compiled& c, std::uint64_t node_budget)
        : ins(c), budget(node_budget) {
        domain.resize(c.n);
        assigned.assign(c.n, -1);
        for (int i = 0; i < c.n; ++i) {
            size_t sz = c.colours[i].size();
            domain[i] = sz == 64 ? ~0ull : ((1ull << sz) - 1);
        }
    }

    bool done() const {
        return truncated || sink_stopped || (stop_at && found >= *stop_at);
    }

    int pick() const {
        int best = -1, best_count = std::numeric_limits<int>::max();
        for (int i = 0; i < ins.n; ++i) {
            if (assigned[i] >= 0) continue;
            if (lexicographic) return i;  // ids are sorted, so first = smallest id
            int cnt = __builtin_popcountll(domain[i]);
            if (cnt < best_count) {
                best_count = cnt;
                best = i;
            }
        }
        return best;
    }

    PartialColouring snapshot() const {
        PartialColouring phi;
        for (int i = 0; i < ins.n; ++i)
            if (assigned[i] >= 0) phi[ins.ids[i]] = ins.colours[i][assigned[i]];
        return phi;
    }

    void search() {
        int v = pick();
        if (v < 0) {
            found += 1;
            if (sink && !(*sink)(snapshot())) sink_stopped = true;
            return;
        }
        std::uint64_t dom = domain[v];
        while (dom && !done()) {
            int c = __builtin_ctzll(dom);
            dom &= dom - 1;
            if (++nodes > budget) {
                truncated = true;
                return;
            }
            assigned[v] = c;
            // prune matched colours at unassigned neighbours
            std::vector<std::pair<int, std::uint64_t>> undo;
            bool dead = false;
            for (size_t s = 0; s < ins.adj[v].size(); ++s) {
                int w = ins.adj[v][s];
                if (assigned[w] >= 0) {
                    // safety: compiled propagation keeps this consistent
                    continue;
                }
                int f = ins.forbid[v][s][c];
                if (f >= 0 && (domain[w] >> f) & 1) {
                    undo.push_back({w, domain[w]});
                    domain[w] &= ~(1ull << f);
                    if (domain[w] == 0) {
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead) search();
            for (auto& [w, mask] : undo) domain[w] = mask;
            assigned[v] = -1;
        }
    }

    // Pre-assign a vertex to a concrete colour index; false when impossible.
    bool preassign(int dense_v, int colour_index) {
        if (!((domain[dense_v] >> colour_index) & 1)) return false;
        assigned[dense_v] = colour_index;
        for (size_t s = 0; s < ins.adj[dense_v].size(); ++s) {
            int w = ins.adj[dense_v][s];
            if (assigned[w] >= 0) continue;
            int f = ins.forbid[dense_v][s][colour_index];
            if (f >= 0) domain[w] &= ~(1ull << f);
        }
        return true;
    }
};

// Shared driver: returns the state after searching with the given setup.
struct RunConfig {
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<BigInt> stop_at;
    bool lexicographic = false;
    const std::function<bool(const PartialColouring&)>* sink = nullptr;
    const PartialColouring* preassigned = nullptr;
};

struct RunOutput {
    BigInt found;
    std::uint64_t nodes;
    bool truncated;
    bool preassign_conflict = false;
};

RunOutput run(const Graph& g, const CorrespondenceAssignment& a, const RunConfig& cfg) {
    Compiled ins = Compiled::build(g, a);
    SearchState st(ins, cfg.budget);
    st.lexicographic = cfg.lexicographic;
    st.stop_at = cfg.stop_at;
    st.sink = cfg.sink;
    if (cfg.preassigned) {
        std::map<int, int> dense;
        for (int i = 0; i < ins.n; ++i) dense[ins.ids[i]] = i;
        for (const auto& [v, col] : *cfg.preassigned) {
            auto it = dense.find(v);
            if (it == dense.end())
                throw PreconditionViolation("precoloured vertex not in graph");
            const auto& list = ins.colours[it->second];
            auto pos = std::lower_bound(list.begin(), list.end(), col);
            if (pos == list.end() || *pos != col)
                throw PreconditionViolation("precoloured colour not in list");
            int idx = static_cast<int>(pos - list.begin());
            if (st.assigned[it->second] >= 0) continue;
            if (!st.preassign(it->second, idx))
                return {0, 0, false, true};
        }
        // conflicts between two preassigned vertices
        for (int i = 0; i < ins.n; ++i) {
            if (st.assigned[i] < 0) continue;
            for (size_t s = 0; s < ins.adj[i].size(); ++s) {
                int w = ins.adj[i][s];
                if (st.assigned[w] < 0) continue;
                int f = ins.forbid[i][s][st.assigned[i]];
                if (f == st.assigned[w]) return {0, 0, false, true};
            }
        }
    }
    st.search();
    return {st.found, st.nodes, st.truncated, false};
}

// phi must colour exactly V(s), s must live inside g, and phi must be valid on s.
void validate_extension_inputs(const Graph& g, const CorrespondenceAssignment& a,
                               const SubgraphRef& s, const PartialColouring& phi) {
    for (int v : s.vertex_subset())
        if (!g.has_vertex(v))
            throw PreconditionViolation("subgraph vertex " + std::to_string(v) +
                                        " is not in the host graph");
    for (const Edge& e : s.edge_subset())
        if (!g.has_edge(e.first, e.second))
            throw PreconditionViolation("subgraph edge {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) +
                                        "} is not in the host graph");
    if (phi.size() != static_cast<size_t>(s.vertex_count()))
        throw PreconditionViolation("precolouring domain must equal the subgraph vertices");
    for (int v : s.vertex_subset())
        if (!phi.count(v))
            throw PreconditionViolation("precolouring misses subgraph vertex " +
                                        std::to_string(v));
    Graph sg = s.materialize();
    auto sa = a.restricted_to(s.vertex_subset(), s.edge_subset());
    if (!is_valid_colouring(sg, sa, phi))
        throw PreconditionViolation("precolouring is not valid on the subgraph");
}

}  // namespace

CountResult count_colourings(const Graph& g, const CorrespondenceAssignment& a,
                             std::uint64_t node_budget) {
    RunConfig cfg;
    cfg.budget = node_budget;
    auto out = run(g, a, cfg);
    return {out.found, out.nodes, out.truncated};
}

CountResult count_extensions(const Graph& g, const CorrespondenceAssignment& a,
                             const SubgraphRef& s, const PartialColouring& phi,
                             std::uint64_t node_budget) {
    validate_extension_inputs(g, a, s, phi);
    RunConfig cfg;
    cfg.budget = node_budget;
    cfg.preassigned = &phi;
    auto out = run(g, a, cfg);
    return {out.found, out.nodes, out.truncated};
}

void enumerate_colourings(const Graph& g, const CorrespondenceAssignment& a,
                          std::uint64_t cap,
                          const std::function<bool(const PartialColouring&)>& sink,
                          std::uint64_t node_budget) {
    RunConfig cfg;
    cfg.budget = node_budget;
    cfg.lexicographic = true;
    if (cap != 0) cfg.stop_at = BigInt(cap);
    cfg.sink = &sink;
    run(g, a, cfg);
}

std::vector<PartialColouring> enumerate_colourings(const Graph& g,
                                                   const CorrespondenceAssignment& a,
                                                   std::uint64_t cap,
                                                   std::uint64_t node_budget) {
    std::vector<PartialColouring> out;
    enumerate_colourings(
        g, a, cap,
        [&](const PartialColouring& phi) {
            out.push_back(phi);
            return true;
        },
        node_budget);
    return out;
}

bool has_at_least(const Graph& g, const CorrespondenceAssignment& a, const BigInt& m,
                  std::uint64_t node_budget) {
    if (m <= 0) return true;
    RunConfig cfg;
    cfg.budget = node_budget;
    cfg.stop_at = m;
    auto out = run(g, a, cfg);
    if (out.found >= m) return true;
    if (out.truncated)
        throw BudgetExceeded("node budget hit before deciding count >= " + m.get_str());
    return false;
}

bool has_at_least_extensions(const Graph& g, const CorrespondenceAssignment& a,
                             const SubgraphRef& s, const PartialColouring& phi,
                             const BigInt& m, std::uint64_t node_budget) {
    if (m <= 0) return true;
    validate_extension_inputs(g, a, s, phi);
    RunConfig cfg;
    cfg.budget = node_budget;
    cfg.stop_at = m;
    cfg.preassigned = &phi;
    auto out = run(g, a, cfg);
    if (out.found >= m) return true;
    if (out.truncated)
        throw BudgetExceeded("node budget hit before deciding count >= " + m.get_str());
    return false;
}

std::optional<PartialColouring> find_extension(const Graph& g,
                                               const CorrespondenceAssignment& a,
                                               const PartialColouring& phi,
                                               std::uint64_t node_budget) {
    std::optional<PartialColouring> result;
    std::function<bool(const PartialColouring&)> grab =
        [&](const PartialColouring& full) {
            result = full;
            return false;
        };
    RunConfig cfg;
    cfg.budget = node_budget;
    cfg.stop_at = BigInt(1);
    cfg.sink = &grab;
    cfg.preassigned = &phi;
    auto out = run(g, a, cfg);
    if (out.truncated && !result)
        throw BudgetExceeded("node budget hit before finding an extension");
    return result;
}

MinPermResult min_count_over_permutations(const Graph& g, int k,
                                          std::uint64_t space_budget,
                                          std::uint64_t node_budget) {
    PermutationAssignments space(g, k);
    std::optional<MinPermResult> best;
    BigInt checked = 0;
    std::uint64_t total_nodes = 0;
    space.for_each(space_budget, [&](const CorrespondenceAssignment& a) {
        auto r = count_colourings(g, a, node_budget);
        if (r.truncated)
            throw BudgetExceeded("node budget hit inside permutation minimum");
        checked += 1;
        total_nodes += r.explored_nodes;
        if (!best || r.count < best->minimum.count) {
            best = MinPermResult{r, a, checked};
        }
        return !(best->minimum.count == 0);  // cannot go below zero
    });
    if (!best) throw PreconditionViolation("empty permutation space");
    best->assignments_checked = checked;
    best->minimum.explored_nodes = total_nodes;
    return *best;
}

}  // namespace corrcount
