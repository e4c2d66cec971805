#pragma once

// Correspondence (DP) colouring machinery: per-vertex colour lists, per-edge
// partial matchings between endpoint lists, assignments bundling them, and
// partial colourings.  All types are immutable after construction; validation
// failures are data, not exceptions.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "corrcount/graph.hpp"
#include "corrcount/plane.hpp"

namespace corrcount {

using Colour = int;
// Pair (colour at the smaller endpoint id, colour at the larger endpoint id).
using ColourPair = std::pair<Colour, Colour>;

struct Violation {
    enum class Kind {
        missing_list,
        unknown_vertex,
        missing_matching,
        unknown_edge,
        colour_outside_list,
        not_a_matching,
        list_below_declared_k,
        duplicate_colour,
    } kind;
    std::string detail;
};

class CorrespondenceAssignment {
  public:
    CorrespondenceAssignment(std::map<int, std::vector<Colour>> lists,
                             std::map<Edge, std::vector<ColourPair>> matchings,
                             std::optional<int> declared_k = std::nullopt);

    const std::map<int, std::vector<Colour>>& lists() const { return lists_; }
    const std::map<Edge, std::vector<ColourPair>>& matchings() const {
        return matchings_;
    }
    std::optional<int> declared_k() const { return declared_k_; }
    const std::vector<Colour>& list_at(int v) const;
    const std::vector<ColourPair>& matching_at(const Edge& e) const;
    bool has_list(int v) const { return lists_.count(v) != 0; }
    // Largest colour value mentioned anywhere, or -1 if none.
    Colour max_colour() const;

    // Restriction to a subgraph: keeps lists of its vertices and matchings of
    // its edges only.
    CorrespondenceAssignment restricted_to(const std::vector<int>& vertices,
                                           const std::vector<Edge>& edges) const;

  private:
    std::map<int, std::vector<Colour>> lists_;          // sorted colour vectors
    std::map<Edge, std::vector<ColourPair>> matchings_; // sorted pair vectors
    std::optional<int> declared_k_;
};

using PartialColouring = std::map<int, Colour>;

// Structural validation of an assignment against its host graph; an empty
// result means valid.  Checks: lists cover exactly V(g); matchings keyed
// exactly by E(g); every matching is a partial matching whose pairs draw from
// the endpoint lists; declared k is respected.
std::vector<Violation> validate(const Graph& g, const CorrespondenceAssignment& a);
std::string violation_to_string(const Violation& v);

// True iff phi's domain lies in V(g), colours come from the lists, and no
// edge with both ends coloured uses a matched pair.
bool is_valid_colouring(const Graph& g, const CorrespondenceAssignment& a,
                        const PartialColouring& phi);

// Identity assignment: M_uv = {(c,c) : c in L(u) and L(v)} for every edge.
// Counting under it coincides with ordinary list colouring.
CorrespondenceAssignment from_lists(const Graph& g,
                                    const std::map<int, std::vector<Colour>>& lists);

// All assignments where every list is {0..k-1} and every matching is a full
// permutation; enumerated with per-edge permutations in lexicographic order,
// edges in sorted order.  Iteration requires (k!)^e within budget.
class PermutationAssignments {
  public:
    PermutationAssignments(const Graph& g, int k);

    BigInt total() const { return total_; }
    // The i-th assignment in the mixed-radix order, 0 <= i < total().
    CorrespondenceAssignment at(const BigInt& index) const;
    // Uniformly random assignment (independent per-edge permutations).
    CorrespondenceAssignment sample(std::mt19937_64& rng) const;
    // Visit all assignments in order; the sink may return false to stop.
    // Throws BudgetExceeded when total() > budget.
    void for_each(std::uint64_t budget,
                  const std::function<bool(const CorrespondenceAssignment&)>& sink) const;
    static constexpr std::uint64_t default_budget = 100'000'000;

  private:
    CorrespondenceAssignment assemble(const std::vector<std::uint32_t>& digits) const;
    Graph g_;
    int k_;
    std::vector<std::vector<std::vector<Colour>>> perms_;  // lexicographic k-perms
    BigInt total_;
};

// The challenge construction that forces a precolouring: each vertex of h gets
// a fresh private colour plus r-1 fresh shared colours; matchings inside h are
// empty; each h-to-outside edge matches the private colour with its copy added
// to the outside list.  `base` supplies lists/matchings outside h (defaults to
// lists {0..deficit-1} with empty matchings).  Returns the assignment and the
// forced colouring of h.  Fresh colours are allocated deterministically above
// every colour in use.
std::pair<CorrespondenceAssignment, PartialColouring> precolouring_gadget(
    const Graph& g, const SubgraphRef& h, int r,
    const std::optional<CorrespondenceAssignment>& base = std::nullopt);

// List sizes driven by vertex girth: 3 -> 5 colours, 4 -> 4, >= 5 -> 3;
// colours {0..size-1}; identity matchings.
CorrespondenceAssignment local_girth_lists(const Graph& g);
CorrespondenceAssignment local_girth_lists(const PlaneGraph& pg);

}  // namespace corrcount
