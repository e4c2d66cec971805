#pragma once

// Structural predicates on graph/subgraph pairs: deficiency arithmetic,
// deletability under adversarial assignments, criticality certificates, and
// the disk boundary-versus-interior inequality.  Every verdict is decided in
// exact integer or rational arithmetic, and every predicate is a pure
// function (callers may fan instances out across threads freely).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrcount/correspondence.hpp"
#include "corrcount/counting.hpp"
#include "corrcount/plane.hpp"

namespace corrcount {

// ---------------------------------------------------------------------------
// Deficiency arithmetic.
//
// For h a subgraph of g and a parameter gp >= 3, with v_diff = v(g) - v(h)
// and e_diff = e(g) - e(h):
//     def_gp = (gp - 2) * e_diff - gp * v_diff,
// and the scaled variant subtracts epsilon * v_diff.  Both are additive
// along chains s <= h <= g.

struct DeficiencyReport {
    int g_param = 3;
    int v_diff = 0;
    int e_diff = 0;
    long long def_g = 0;
    Rational epsilon = 0;    // the epsilon used for d_scaled_sign
    int d_scaled_sign = 0;   // sign of def_g - epsilon * v_diff: -1, 0, +1
};

// The canonical epsilon paired with each parameter: 1/50 for 3, 1/88 for 5,
// 0 otherwise.
Rational default_epsilon(int g_param);

// Exact report; epsilon defaults to default_epsilon(g_param).
DeficiencyReport deficiency(const Graph& g, const SubgraphRef& h, int g_param,
                            const std::optional<Rational>& epsilon = std::nullopt);

// Exact truth of def_gp - epsilon * v_diff >= threshold.
bool d_ge_check(const Graph& g, const SubgraphRef& h, int g_param,
                const Rational& epsilon, const Rational& threshold);

// ---------------------------------------------------------------------------
// Deletability.
//
// An induced subgraph h of g is r-deletable when h is colourable under
// EVERY assignment whose list sizes obey the deficit rule
//     |L(u)| >= r - (deg_g(u) - deg_h(u)).
// The universal quantifier is decided exactly by enumerating canonical
// minimum-size lists {0..n_u-1} with every maximal matching (an injection of
// the smaller endpoint list into the larger) on each edge: per-vertex colour
// renaming canonicalizes the lists, and removing pairs from a matching only
// helps the colouring, so the maximal-matching verdict decides all
// assignments.  The reduction is property-tested against the unreduced
// quantifier on tiny instances.

enum class DeletabilityStatus { deletable, not_deletable, unknown_budget };

struct DeletabilityVerdict {
    DeletabilityStatus status = DeletabilityStatus::unknown_budget;
    // A deficit-rule assignment defeating h; present iff not_deletable.
    std::optional<CorrespondenceAssignment> witness;
    BigInt checked_assignments = 0;
};

// Exact decision when the assignment space fits inside assignment_budget;
// otherwise a seeded randomized falsification pass runs, returning either
// not_deletable (with witness) or unknown_budget.  Never throws on resource
// exhaustion: node-budget blowups also yield unknown_budget.
DeletabilityVerdict is_deletable(const Graph& g, const SubgraphRef& h, int r,
                                 const BigInt& assignment_budget = BigInt(1000000),
                                 std::uint64_t node_budget = kDefaultNodeBudget,
                                 std::uint64_t falsification_samples = 256,
                                 std::uint64_t seed = 1);

// As is_deletable, but each assignment must admit at least
// ceil(2^{epsilon * v(h)}) colourings (compared exactly via integer powers).
DeletabilityVerdict is_exponentially_deletable(
    const Graph& g, const SubgraphRef& h, int r, const Rational& epsilon,
    const BigInt& assignment_budget = BigInt(1000000),
    std::uint64_t node_budget = kDefaultNodeBudget,
    std::uint64_t falsification_samples = 256, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Criticality.
//
// g is s-critical for assignment a when every proper subgraph g' of g that
// contains s admits a colouring of s extending to g' but not to g.  Since an
// extension to a supergraph restricts to any subgraph, it suffices to check
// the maximal proper subgraphs: g minus one edge outside s, and g minus one
// vertex outside s.  That monotonicity is recorded as a tested lemma, not
// assumed silently.

struct SubgraphDeletion {
    std::optional<Edge> edge;  // exactly one of the two is set
    std::optional<int> vertex;
};

struct CriticalCertificateEntry {
    SubgraphDeletion removed;
    PartialColouring phi;  // extends to the reduced graph but not to g
};

struct CriticalityResult {
    bool critical = false;
    std::vector<CriticalCertificateEntry> certificate;  // filled when critical
    std::optional<SubgraphDeletion> failing;            // set when not critical
};

// Throws BudgetExceeded when s admits more colourings than colouring_budget
// or the underlying searches blow node_budget.
CriticalityResult is_critical(const Graph& g, const SubgraphRef& s,
                              const CorrespondenceAssignment& a,
                              const BigInt& colouring_budget = BigInt(1000000),
                              std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------
// Search for a deletable induced subgraph avoiding h.

struct DeletableSearchResult {
    // The first deletable X found (vertices outside h, smallest-first then
    // lexicographic); nullopt when none was found.
    std::optional<std::vector<int>> x;
    // True when every candidate was decided exactly; false means the budget
    // ran out with some candidates undecided, so "none found" is not a proof.
    bool exhaustive = true;
    BigInt checked_assignments = 0;
};

// Candidates range over subsets X of V(g) - V(h) with g[X] connected: a
// disconnected deletable X would have deletable components (the deficit rule
// factors over components), and those are smaller connected candidates, so
// restricting to connected X preserves the found/none answer.
DeletableSearchResult deletable_subgraph_search(
    const Graph& g, const SubgraphRef& h, int r,
    const BigInt& assignment_budget = BigInt(1000000),
    std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------------------
// Disk inequality: interior vertices versus boundary length.

struct CheegerVerdict {
    bool holds = false;
    bool vacuous = false;  // empty interior: holds trivially
    int interior_count = 0;
    int boundary_count = 0;
    Rational c = 0;
};

// boundary must equal the vertex set of pg's outer walk.  Verdict:
// interior_count <= c * (boundary_count - 1), exact rational comparison.
CheegerVerdict cheeger_disk_check(const PlaneGraph& pg,
                                  const std::vector<int>& boundary,
                                  const Rational& c);

}  // namespace corrcount
