#pragma once

// Exact counting and enumeration of correspondence colourings via pruned
// backtracking.  Counts are arbitrary-precision; budgets make truncation
// explicit (a truncated count is a lower bound, never silently wrong).

#include <cstdint>
#include <functional>
#include <optional>

#include "corrcount/correspondence.hpp"

namespace corrcount {

struct CountResult {
    BigInt count = 0;
    std::uint64_t explored_nodes = 0;
    bool truncated = false;  // false implies count is exact
};

constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

// Number of full (L,M)-colourings of g.  Validates the assignment first.
CountResult count_colourings(const Graph& g, const CorrespondenceAssignment& a,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Number of full colourings agreeing with phi on V(s); phi must be a valid
// colouring of s with domain exactly V(s).
CountResult count_extensions(const Graph& g, const CorrespondenceAssignment& a,
                             const SubgraphRef& s, const PartialColouring& phi,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Stream distinct full colourings in lexicographic (vertex id, colour) order;
// stops after `cap` colourings or when the sink returns false.
void enumerate_colourings(const Graph& g, const CorrespondenceAssignment& a,
                          std::uint64_t cap,
                          const std::function<bool(const PartialColouring&)>& sink,
                          std::uint64_t node_budget = kDefaultNodeBudget);
std::vector<PartialColouring> enumerate_colourings(
    const Graph& g, const CorrespondenceAssignment& a, std::uint64_t cap,
    std::uint64_t node_budget = kDefaultNodeBudget);

// Exact decision of count >= m via capped search (no full count needed).
bool has_at_least(const Graph& g, const CorrespondenceAssignment& a, const BigInt& m,
                  std::uint64_t node_budget = kDefaultNodeBudget);
// Same, for extensions of phi.
bool has_at_least_extensions(const Graph& g, const CorrespondenceAssignment& a,
                             const SubgraphRef& s, const PartialColouring& phi,
                             const BigInt& m,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// First full colouring extending phi, if any; nullopt when none exists.
// The exhaustive-search primitive behind the extension theorems.
std::optional<PartialColouring> find_extension(
    const Graph& g, const CorrespondenceAssignment& a, const PartialColouring& phi,
    std::uint64_t node_budget = kDefaultNodeBudget);

struct MinPermResult {
    CountResult minimum;                  // exact count of the worst assignment
    CorrespondenceAssignment witness;     // an assignment attaining the minimum
    BigInt assignments_checked = 0;
};

// Exact minimum of count_colourings over all full-permutation assignments
// with lists {0..k-1}; requires (k!)^e within `space_budget`.
MinPermResult min_count_over_permutations(
    const Graph& g, int k,
    std::uint64_t space_budget = PermutationAssignments::default_budget,
    std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace corrcount
