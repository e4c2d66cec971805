#pragma once

// Closed-form lower-bound evaluators and the exact comparator that checks
// them against oracle counts.  Every bound of the form base^{p/q} is compared
// through the cross-power rule count^q >= base^p in big integers; exponent
// rationals are stored reduced; no floating point anywhere.

#include <cstdint>
#include <string>

#include "corrcount/counting.hpp"
#include "corrcount/plane.hpp"
#include "corrcount/structure.hpp"

namespace corrcount {

// ---------------------------------------------------------------------------
// Exponent evaluators (all return the exponent p/q; the base is noted).

// Base 2: planar graphs under 5-assignments admit at least 2^{v/67} colourings.
Rational thm_planar_5cc_bound(int v);

// Base 2: planar girth-5 graphs under 3-assignments, at least 2^{v/282}.
Rational thm_planar_3cc_girth5_bound(int v);

// Base 2: extension form (v(g|s) - 51 * def_3(g|s)) / 67.
Rational thm_extension_5cc_bound(const Graph& g, const SubgraphRef& s);

// Base 2: girth-5 extension form (v(g|s) - 89 * def_5(g|s)) / 282.
Rational thm_extension_3cc_bound(const Graph& g, const SubgraphRef& s);

// Base 5: graphs with girth-driven list sizes, at least 5^{v/12}.
Rational local_girth_bound(int v);

// Exact integer threshold 60 * 2^{v-3} for 5-colourings; requires v >= 3.
BigInt birkhoff_lewis_bound(int v);

// ---------------------------------------------------------------------------
// Polynomial-method bound: at least t^{(S - n - d)/(t - 1)} nonzeros,
// requiring t >= 2.  S, n, d come from a (graph, assignment) instance via
// alon_furedi_params: S = sum of list sizes, n = vertex count, d = edge count.

struct BoundThreshold {
    std::string name;
    BigInt base = 2;
    Rational exponent = 0;
};

struct AlonFurediParams {
    BigInt s_sum = 0;
    int n = 0;
    int d = 0;
    int t = 2;
};

AlonFurediParams alon_furedi_params(const Graph& g, const CorrespondenceAssignment& a,
                                    int t);

BoundThreshold alon_furedi(const BigInt& s_sum, int n, int d, int t);

// ---------------------------------------------------------------------------
// Embedding identity slack: v(g) - sum over edges of (1 - 2/g(e)), where
// g(e) is the length of the shortest cycle through e and the term for an
// edge on no cycle is 1 (2/infinity = 0).  For connected planar graphs with
// at least one cycle the slack is >= 2, with equality on cycles and
// triangulations.  Throws on forests (the hypothesis needs a cycle).
Rational euler_girth_slack(const Graph& g);
Rational euler_girth_slack(const PlaneGraph& pg);

// ---------------------------------------------------------------------------
// Verdicts.

struct BoundVerdict {
    std::string bound_name;
    BigInt exponent_num = 0;
    BigInt exponent_den = 1;
    BigInt oracle_count = 0;
    bool holds = false;
    std::string comparison_method;
};

// holds <=> count^q >= base^p when p >= 0; when p < 0 the bound is below 1,
// so any count >= 1 holds vacuously.  A truncated count is a lower bound on
// the true count, so `holds` is then reliable only when true; the method
// string records that.
BoundVerdict verify_bound(const CountResult& count, const BoundThreshold& threshold);

// Flat integer comparison count >= threshold (same truncation semantics).
BoundVerdict verify_flat_bound(const CountResult& count, const std::string& name,
                               const BigInt& threshold);

}  // namespace corrcount
