#include "corrcount/bounds.hpp"

namespace corrcount {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw PreconditionViolation(msg);
}

Rational reduced(long long num, long long den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

}  // namespace

Rational thm_planar_5cc_bound(int v) {
    require(v >= 0, "vertex count must be nonnegative");
    return reduced(v, 67);
}

Rational thm_planar_3cc_girth5_bound(int v) {
    require(v >= 0, "vertex count must be nonnegative");
    return reduced(v, 282);
}

Rational thm_extension_5cc_bound(const Graph& g, const SubgraphRef& s) {
    auto rep = deficiency(g, s, 3);
    return reduced(rep.v_diff - 51 * rep.def_g, 67);
}

Rational thm_extension_3cc_bound(const Graph& g, const SubgraphRef& s) {
    auto rep = deficiency(g, s, 5);
    return reduced(rep.v_diff - 89 * rep.def_g, 282);
}

Rational local_girth_bound(int v) {
    require(v >= 0, "vertex count must be nonnegative");
    return reduced(v, 12);
}

BigInt birkhoff_lewis_bound(int v) {
    require(v >= 3, "the threshold needs at least 3 vertices");
    return BigInt(60) * pow_big(BigInt(2), static_cast<unsigned long>(v - 3));
}

AlonFurediParams alon_furedi_params(const Graph& g, const CorrespondenceAssignment& a,
                                    int t) {
    AlonFurediParams p;
    for (int v : g.vertices()) p.s_sum += static_cast<long>(a.list_at(v).size());
    p.n = g.vertex_count();
    p.d = g.edge_count();
    p.t = t;
    return p;
}

BoundThreshold alon_furedi(const BigInt& s_sum, int n, int d, int t) {
    require(t >= 2, "the bound needs t >= 2");
    BoundThreshold th;
    th.name = "alonfuredi";
    th.base = t;
    Rational e(s_sum - n - d);
    e /= t - 1;
    th.exponent = e;
    return th;
}

Rational euler_girth_slack(const Graph& g) {
    require(!girth(g).is_infinite(),
            "the slack needs a graph containing a cycle");
    Rational sum = 0;
    for (const Edge& e : g.edges()) {
        GirthValue eg = edge_girth(g, e);
        if (eg.is_infinite()) {
            sum += 1;  // 2/g(e) reads as 0 for an edge on no cycle
        } else {
            Rational term(2, static_cast<long>(eg.value()));
            term.canonicalize();
            sum += Rational(1) - term;
        }
    }
    return Rational(g.vertex_count()) - sum;
}

Rational euler_girth_slack(const PlaneGraph& pg) { return euler_girth_slack(pg.graph()); }

BoundVerdict verify_bound(const CountResult& count, const BoundThreshold& threshold) {
    BoundVerdict v;
    v.bound_name = threshold.name;
    v.exponent_num = threshold.exponent.get_num();
    v.exponent_den = threshold.exponent.get_den();
    v.oracle_count = count.count;
    if (v.exponent_num < 0) {
        v.holds = count.count >= 1;
        v.comparison_method = "vacuous-negative-exponent";
    } else {
        require(v.exponent_num.fits_ulong_p() && v.exponent_den.fits_ulong_p(),
                "exponent out of range");
        v.holds = cross_power_at_least(count.count, v.exponent_den.get_ui(),
                                       threshold.base, v.exponent_num.get_ui());
        v.comparison_method = "cross-power";
    }
    if (count.truncated) v.comparison_method += "+truncated-lower-bound";
    return v;
}

BoundVerdict verify_flat_bound(const CountResult& count, const std::string& name,
                               const BigInt& threshold) {
    BoundVerdict v;
    v.bound_name = name;
    v.oracle_count = count.count;
    v.holds = count.count >= threshold;
    v.comparison_method = "integer-compare";
    if (count.truncated) v.comparison_method += "+truncated-lower-bound";
    return v;
}

}  // namespace corrcount
