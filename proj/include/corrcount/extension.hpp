#pragma once

// Constructive colouring-extension solvers for plane graphs.
//
// Two boundary-list patterns are supported: the 1/3/5 pattern (a short
// precoloured path on the outer walk, lists of 3 on the rest of the walk,
// lists of 5 inside) and the girth-five 1/2/3 pattern (a precoloured path or
// cycle of up to six outer vertices, an independent set of outer vertices
// with lists of exactly 2, lists of 3 everywhere else).  Under either
// pattern every valid precolouring extends to the whole graph, so the
// solvers have a never-fail contract:
//
//   - PreconditionViolation: the instance does not match the pattern.
//   - TheoremFalsified: the pattern was verified yet exhaustive search found
//     no extension.  This is terminal; it can only mean a bug, so tests
//     treat it as a hard failure.
//
// The search itself is pruned backtracking (see counting.hpp); it is the
// authority on existence, and the structural pattern checks only guard the
// contract.

#include <cstdint>
#include <vector>

#include "corrcount/correspondence.hpp"
#include "corrcount/counting.hpp"
#include "corrcount/plane.hpp"

namespace corrcount {

// 1/3/5 pattern.  `s` is a path with at most 2 vertices drawn from the
// outer walk (vertices and edges); it may be empty.  List sizes: >= 1 on s,
// >= 3 on the rest of the outer walk, >= 5 strictly inside.  `phi` must be
// a valid colouring with domain exactly V(s).  Returns a full colouring of
// pg agreeing with phi on V(s).
PartialColouring extend_5cc(const PlaneGraph& pg, const CorrespondenceAssignment& a,
                            const SubgraphRef& s, const PartialColouring& phi,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Girth-five 1/2/3 pattern.  Requires girth(pg) >= 5.  `s` is a path or
// cycle with at most 6 vertices drawn from the outer walk; it may be empty.
// `independent2` is an independent set of outer-walk vertices, disjoint
// from s and with no edges into s, each holding a list of exactly 2.
// List sizes: >= 1 on s, == 2 on independent2, >= 3 everywhere else.
PartialColouring extend_3cc_girth5(const PlaneGraph& pg,
                                   const CorrespondenceAssignment& a,
                                   const SubgraphRef& s,
                                   const std::vector<int>& independent2,
                                   const PartialColouring& phi,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

// Colours an induced subgraph h of pg under `challenge`, an assignment on h
// whose list sizes respect the deficit rule
//     |L(u)| >= r - (deg_pg(u) - deg_h(u)),   r in {3, 5},
// with every list nonempty.  Tries, in order: greedy (edgeless h), a direct
// application of the matching extension solver on the induced sub-embedding,
// the helper-vertex construction (one deleted neighbour adjacent to all the
// low-list vertices returns with a single fresh forced colour, which pads
// the low lists via singleton matchings and is stripped from the result),
// and finally raw backtracking.  Throws PreconditionViolation when the
// challenge breaks the deficit rule, has an empty list, or defeats every
// route; TheoremFalsified only if a fully verified pattern had no extension.
PartialColouring check_deletable_via_extension(const PlaneGraph& pg,
                                               const SubgraphRef& h, int r,
                                               const CorrespondenceAssignment& challenge,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace corrcount
