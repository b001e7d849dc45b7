#pragma once

// Exact arithmetic primitives: arbitrary-precision integers and rationals
// (GMP-backed) plus the handful of combinatorial helpers used everywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinh {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(std::uint64_t n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int pow_int(const Int& base, std::uint64_t e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// base^e for a signed integer exponent (e < 0 requires base != 0).
inline Rat pow_rat(const Rat& base, std::int64_t e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw std::domain_error("pow_rat: 0 to a negative power");
    Rat b = e > 0 ? base : Rat(1) / base;
    std::uint64_t n = e > 0 ? static_cast<std::uint64_t>(e)
                            : static_cast<std::uint64_t>(-e);
    Rat out = 1;
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

// 2^e with e allowed to be negative.
inline Rat pow2(std::int64_t e) { return pow_rat(Rat(2), e); }

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat out(std::move(num), std::move(den));
    out.canonicalize();
    return out;
}

// Lowest-terms serialization: "p" when the denominator is 1, else "p/q".
inline std::string to_pq_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat out;
    if (out.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: '" + s + "'");
    out.canonicalize();
    return out;
}

}  // namespace spinh
