#include "corrcount/correspondence.hpp"

#include <algorithm>
#include <set>

namespace corrcount {

CorrespondenceAssignment::CorrespondenceAssignment(
    std::map<int, std::vector<Colour>> lists,
    std::map<Edge, std::vector<ColourPair>> matchings, std::optional<int> declared_k)
    : lists_(std::move(lists)), matchings_(std::move(matchings)),
      declared_k_(declared_k) {
    for (auto& [v, list] : lists_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    for (auto& [e, pairs] : matchings_) {
        if (e.first >= e.second)
            throw PreconditionViolation("matching key is not a normalized edge");
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
}

const std::vector<Colour>& CorrespondenceAssignment::list_at(int v) const {
    auto it = lists_.find(v);
    if (it == lists_.end())
        throw PreconditionViolation("no colour list for vertex " + std::to_string(v));
    return it->second;
}

const std::vector<ColourPair>& CorrespondenceAssignment::matching_at(const Edge& e) const {
    static const std::vector<ColourPair> empty;
    auto it = matchings_.find(make_edge(e.first, e.second));
    return it == matchings_.end() ? empty : it->second;
}

Colour CorrespondenceAssignment::max_colour() const {
    Colour m = -1;
    for (const auto& [v, list] : lists_)
        if (!list.empty()) m = std::max(m, list.back());
    for (const auto& [e, pairs] : matchings_)
        for (const auto& [a, b] : pairs) m = std::max({m, a, b});
    return m;
}

CorrespondenceAssignment CorrespondenceAssignment::restricted_to(
    const std::vector<int>& vertices, const std::vector<Edge>& edges) const {
    std::map<int, std::vector<Colour>> lists;
    for (int v : vertices) {
        auto it = lists_.find(v);
        if (it != lists_.end()) lists[v] = it->second;
    }
    std::map<Edge, std::vector<ColourPair>> match;
    for (const auto& e : edges) {
        Edge key = make_edge(e.first, e.second);
        auto it = matchings_.find(key);
        match[key] = it == matchings_.end() ? std::vector<ColourPair>{} : it->second;
    }
    return CorrespondenceAssignment(std::move(lists), std::move(match), declared_k_);
}

std::vector<Violation> validate(const Graph& g, const CorrespondenceAssignment& a) {
    std::vector<Violation> out;
    using K = Violation::Kind;
    for (int v : g.vertices())
        if (!a.has_list(v))
            out.push_back({K::missing_list, "vertex " + std::to_string(v) + " has no list"});
    for (const auto& [v, list] : a.lists()) {
        if (!g.has_vertex(v))
            out.push_back({K::unknown_vertex,
                           "list for vertex " + std::to_string(v) + " not in graph"});
        if (a.declared_k() && static_cast<int>(list.size()) < *a.declared_k())
            out.push_back({K::list_below_declared_k,
                           "vertex " + std::to_string(v) + " has " +
                               std::to_string(list.size()) + " colours, below k=" +
                               std::to_string(*a.declared_k())});
    }
    std::set<Edge> keyed;
    for (const auto& [e, pairs] : a.matchings()) {
        keyed.insert(e);
        if (!g.has_edge(e.first, e.second)) {
            out.push_back({K::unknown_edge,
                           "matching keyed by non-edge " + std::to_string(e.first) + "," +
                               std::to_string(e.second)});
            continue;
        }
        std::set<Colour> used_u, used_v;
        for (const auto& [cu, cv] : pairs) {
            const auto eu = a.has_list(e.first) ? a.list_at(e.first) : std::vector<Colour>{};
            const auto ev = a.has_list(e.second) ? a.list_at(e.second) : std::vector<Colour>{};
            if (!std::binary_search(eu.begin(), eu.end(), cu) ||
                !std::binary_search(ev.begin(), ev.end(), cv))
                out.push_back({K::colour_outside_list,
                               "edge " + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + " pair (" +
                                   std::to_string(cu) + "," + std::to_string(cv) +
                                   ") uses a colour outside an endpoint list"});
            if (!used_u.insert(cu).second || !used_v.insert(cv).second)
                out.push_back({K::not_a_matching,
                               "edge " + std::to_string(e.first) + "," +
                                   std::to_string(e.second) +
                                   " repeats a colour across pairs"});
        }
    }
    for (const auto& e : g.edges())
        if (!keyed.count(e))
            out.push_back({K::missing_matching,
                           "edge " + std::to_string(e.first) + "," +
                               std::to_string(e.second) + " has no matching entry"});
    return out;
}

std::string violation_to_string(const Violation& v) { return v.detail; }

bool is_valid_colouring(const Graph& g, const CorrespondenceAssignment& a,
                        const PartialColouring& phi) {
    for (const auto& [v, c] : phi) {
        if (!g.has_vertex(v)) return false;
        const auto& list = a.list_at(v);
        if (!std::binary_search(list.begin(), list.end(), c)) return false;
    }
    for (const auto& e : g.edges()) {
        auto iu = phi.find(e.first);
        auto iv = phi.find(e.second);
        if (iu == phi.end() || iv == phi.end()) continue;
        const auto& pairs = a.matching_at(e);
        if (std::binary_search(pairs.begin(), pairs.end(),
                               ColourPair{iu->second, iv->second}))
            return false;
    }
    return true;
}

CorrespondenceAssignment from_lists(const Graph& g,
                                    const std::map<int, std::vector<Colour>>& lists) {
    for (int v : g.vertices())
        if (!lists.count(v))
            throw PreconditionViolation("from_lists: vertex " + std::to_string(v) +
                                        " has no list");
    std::map<int, std::vector<Colour>> sorted_lists = lists;
    for (auto& [v, list] : sorted_lists) std::sort(list.begin(), list.end());
    std::map<Edge, std::vector<ColourPair>> match;
    for (const auto& e : g.edges()) {
        std::vector<ColourPair> pairs;
        const auto& lu = sorted_lists.at(e.first);
        const auto& lv = sorted_lists.at(e.second);
        for (Colour c : lu)
            if (std::binary_search(lv.begin(), lv.end(), c)) pairs.push_back({c, c});
        match[e] = std::move(pairs);
    }
    return CorrespondenceAssignment(std::move(sorted_lists), std::move(match));
}

// --- full-permutation assignment space ---------------------------------------

PermutationAssignments::PermutationAssignments(const Graph& g, int k) : g_(g), k_(k) {
    if (k < 1) throw PreconditionViolation("permutation assignments need k >= 1");
    std::vector<Colour> base(k);
    for (int i = 0; i < k; ++i) base[i] = i;
    std::vector<std::vector<Colour>> perms;
    std::vector<Colour> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    perms_.assign(g_.edge_count(), perms);
    total_ = 1;
    for (int i = 0; i < g_.edge_count(); ++i) total_ *= BigInt(perms.size());
}

CorrespondenceAssignment PermutationAssignments::assemble(
    const std::vector<std::uint32_t>& digits) const {
    std::map<int, std::vector<Colour>> lists;
    std::vector<Colour> base(k_);
    for (int i = 0; i < k_; ++i) base[i] = i;
    for (int v : g_.vertices()) lists[v] = base;
    std::map<Edge, std::vector<ColourPair>> match;
    const auto& edges = g_.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& perm = perms_[i][digits[i]];
        std::vector<ColourPair> pairs;
        for (int c = 0; c < k_; ++c) pairs.push_back({c, perm[c]});
        match[edges[i]] = std::move(pairs);
    }
    return CorrespondenceAssignment(std::move(lists), std::move(match), k_);
}

CorrespondenceAssignment PermutationAssignments::at(const BigInt& index) const {
    if (index < 0 || index >= total_)
        throw PreconditionViolation("permutation assignment index out of range");
    BigInt rest = index;
    std::vector<std::uint32_t> digits(g_.edge_count(), 0);
    BigInt radix(perms_.empty() ? 1 : static_cast<unsigned long>(perms_[0].size()));
    for (int i = g_.edge_count() - 1; i >= 0; --i) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), radix.get_mpz_t());
        digits[i] = static_cast<std::uint32_t>(r.get_ui());
        rest = q;
    }
    return assemble(digits);
}

CorrespondenceAssignment PermutationAssignments::sample(std::mt19937_64& rng) const {
    std::vector<std::uint32_t> digits(g_.edge_count());
    std::uniform_int_distribution<std::uint32_t> dist(
        0, perms_.empty() ? 0 : static_cast<std::uint32_t>(perms_[0].size() - 1));
    for (auto& d : digits) d = dist(rng);
    return assemble(digits);
}

void PermutationAssignments::for_each(
    std::uint64_t budget,
    const std::function<bool(const CorrespondenceAssignment&)>& sink) const {
    if (total_ > BigInt(budget))
        throw BudgetExceeded("permutation space " + total_.get_str() +
                             " exceeds budget " + std::to_string(budget));
    std::vector<std::uint32_t> digits(g_.edge_count(), 0);
    std::uint32_t radix = perms_.empty() ? 1 : static_cast<std::uint32_t>(perms_[0].size());
    while (true) {
        if (!sink(assemble(digits))) return;
        int pos = g_.edge_count() - 1;
        while (pos >= 0) {
            if (++digits[pos] < radix) break;
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

// --- precolouring gadget ------------------------------------------------------

std::pair<CorrespondenceAssignment, PartialColouring> precolouring_gadget(
    const Graph& g, const SubgraphRef& h, int r,
    const std::optional<CorrespondenceAssignment>& base) {
    if (r < 1) throw PreconditionViolation("gadget needs r >= 1");
    if (h.vertex_count() == 0)
        throw PreconditionViolation("gadget needs a nonempty precoloured subgraph");
    if (h.vertex_count() == g.vertex_count())
        throw PreconditionViolation("gadget needs a proper subgraph");
    for (int v : h.vertex_subset())
        if (!g.has_vertex(v))
            throw PreconditionViolation("gadget subgraph vertex not in graph");

    auto in_h = [&](int v) { return h.has_vertex(v); };

    // Outside lists/matchings: the supplied challenge, or lists sized by the
    // degree deficit r - (#neighbours in h) with empty matchings.
    std::map<int, std::vector<Colour>> lists;
    std::map<Edge, std::vector<ColourPair>> match;
    Colour fresh = 0;
    if (base) {
        for (const auto& [v, list] : base->lists()) {
            if (in_h(v) || !g.has_vertex(v))
                throw PreconditionViolation(
                    "gadget base assignment must cover exactly the outside vertices");
            lists[v] = list;
        }
        for (const auto& [e, pairs] : base->matchings()) {
            if (in_h(e.first) || in_h(e.second))
                throw PreconditionViolation(
                    "gadget base assignment mentions an edge touching the subgraph");
            match[e] = pairs;
        }
        fresh = std::max(fresh, base->max_colour() + 1);
    } else {
        for (int v : g.vertices()) {
            if (in_h(v)) continue;
            int deficit = r - static_cast<int>(neighbours_in(g, v, h.vertex_subset()).size());
            std::vector<Colour> list;
            for (int c = 0; c < deficit; ++c) list.push_back(c);
            lists[v] = std::move(list);
            fresh = std::max(fresh, r);
        }
    }
    for (int v : g.vertices())
        if (!in_h(v) && !lists.count(v))
            throw PreconditionViolation("gadget base assignment misses vertex " +
                                        std::to_string(v));

    // Fresh private colours per h-vertex, then r-1 fresh shared colours.
    std::map<int, Colour> private_colour;
    for (int v : h.vertex_subset()) private_colour[v] = fresh++;
    std::vector<Colour> shared;
    for (int i = 0; i < r - 1; ++i) shared.push_back(fresh++);

    PartialColouring forced;
    for (int v : h.vertex_subset()) {
        std::vector<Colour> list{private_colour[v]};
        list.insert(list.end(), shared.begin(), shared.end());
        lists[v] = std::move(list);
        forced[v] = private_colour[v];
    }
    for (const auto& e : g.edges()) {
        bool u_in = in_h(e.first), v_in = in_h(e.second);
        if (u_in && v_in) {
            match[e] = {};
        } else if (u_in || v_in) {
            int hv = u_in ? e.first : e.second;
            int out = u_in ? e.second : e.first;
            Colour c = private_colour[hv];
            auto& list = lists[out];
            if (!std::binary_search(list.begin(), list.end(), c)) {
                list.push_back(c);
                std::sort(list.begin(), list.end());
            }
            match[e] = {ColourPair{c, c}};
        }
        // edges fully outside keep the base matching (possibly absent = empty)
        if (!match.count(e)) match[e] = {};
    }
    return {CorrespondenceAssignment(std::move(lists), std::move(match)), forced};
}

// --- local-girth-driven lists --------------------------------------------------

CorrespondenceAssignment local_girth_lists(const Graph& g) {
    std::map<int, std::vector<Colour>> lists;
    for (int v : g.vertices()) {
        GirthValue gv = vertex_girth(g, v);
        int size = 3;
        if (!gv.is_infinite()) {
            if (gv.value() == 3)
                size = 5;
            else if (gv.value() == 4)
                size = 4;
        }
        std::vector<Colour> list(size);
        for (int c = 0; c < size; ++c) list[c] = c;
        lists[v] = std::move(list);
    }
    return from_lists(g, lists);
}

CorrespondenceAssignment local_girth_lists(const PlaneGraph& pg) {
    return local_girth_lists(pg.graph());
}

}  // namespace corrcount
