#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tenslab {

// All scalar arithmetic in the library is exact. Rat is a reduced fraction
// with positive denominator (GMP canonical form); nothing ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

// Parses decimal-free rational strings: "3", "-7", "5/9", "-1/2".
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rat rat_pow(const Rat& q, long e) {
    Rat r = 1;
    Rat base = q;
    long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) r *= base;
    if (e < 0) {
        if (r == 0) throw std::domain_error("rat_pow: zero to negative power");
        r = Rat(1) / r;
    }
    return r;
}

}  // namespace tenslab
