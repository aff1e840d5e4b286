#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

/// Arbitrary-precision signed integer. Walk determinants overflow 64 bits
/// already at n=7, so everything downstream of a determinant uses Int.
using Int = mpz_class;

inline Int int_from_string(const std::string& s) {
    return Int(s);
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

inline Int abs(const Int& z) {
    Int r;
    mpz_abs(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// 2^e as an Int.
inline Int two_pow(unsigned long e) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

/// Nonnegative residue of a mod m (m > 0).
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Exact quotient a/b; caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Largest v with 2^v | z.
inline unsigned long two_adic_valuation(const Int& z) {
    if (z == 0) throw numeric_error("two_adic_valuation: 0 has infinite valuation");
    return mpz_scan1(z.get_mpz_t(), 0);
}

/// Natural log of |z| (z != 0), stable for values far beyond double range.
inline double log_abs(const Int& z) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    if (d < 0) d = -d;
    return std::log(d) + static_cast<double>(exp2) * 0.6931471805599453;
}

} // namespace qwalk
