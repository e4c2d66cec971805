#pragma once

// Exact integer/rational helpers shared across the library.  All bound
// comparisons go through cross-multiplied integer arithmetic; no floats.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace corrcount {

using BigInt = mpz_class;
using Rational = mpq_class;

// Errors carry the CLI exit-code semantics; see io.hpp for the mapping.
struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Terminal error: preconditions verified but an extension guaranteed to exist
// was not found.  Must never occur; existence is a test assertion.
struct TheoremFalsified : std::logic_error {
    using std::logic_error::logic_error;
};

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// count^den >= base^num, all exact.  Requires den >= 1 and num >= 0.
inline bool cross_power_at_least(const BigInt& count, unsigned long den,
                                 const BigInt& base, unsigned long num) {
    if (den == 0) throw PreconditionViolation("cross_power_at_least: zero denominator");
    return pow_big(count, den) >= pow_big(base, num);
}

// Smallest integer c >= 0 with c^den >= base^num (i.e. ceil(base^{num/den})).
inline BigInt ceil_power_root(const BigInt& base, unsigned long num, unsigned long den) {
    if (den == 0) throw PreconditionViolation("ceil_power_root: zero denominator");
    if (base < 0) throw PreconditionViolation("ceil_power_root: negative base");
    BigInt t = pow_big(base, num);
    if (t == 0) return 0;
    BigInt root;
    int exact = mpz_root(root.get_mpz_t(), t.get_mpz_t(), den);
    if (!exact) root += 1;
    return root;
}

// Parse "p" or "p/q" into an exact rational (q > 0 after canonicalization).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{BigInt(text)};
            return r;
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + text);
        Rational r;
        r = Rational(num) / Rational(den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + text);
    }
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace corrcount
