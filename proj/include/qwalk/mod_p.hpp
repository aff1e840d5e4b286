#pragma once

#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/factor.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/int_poly.hpp"
#include "qwalk/numeric.hpp"

namespace qwalk {

namespace detail {

inline Int inv_mod(const Int& a, const Int& p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw numeric_error("inv_mod: not invertible");
    return r;
}

} // namespace detail

/// Basis of { v : m v = 0 over F_p }, each vector scaled so its first
/// nonzero entry is 1. The prime is used at arbitrary precision; walk
/// determinants routinely have prime factors beyond 64 bits.
inline std::vector<std::vector<Int>> nullspace_mod_p(const IntMatrix& m, const Int& p) {
    if (!is_probable_prime(p)) throw argument_error("nullspace_mod_p: p must be prime");
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(rows),
                                    std::vector<Int>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = mod(m(i, j), p);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        const Int inv = detail::inv_mod(a[r][c], p);
        for (int j = c; j < cols; ++j) a[r][j] = mod(a[r][j] * inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Int f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<std::vector<Int>> basis;
    int next_pivot = 0;
    for (int c = 0; c < cols; ++c) {
        if (next_pivot < static_cast<int>(pivot_col.size()) &&
            pivot_col[static_cast<std::size_t>(next_pivot)] == c) {
            ++next_pivot;
            continue;
        }
        std::vector<Int> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(c)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = mod(-a[i][static_cast<std::size_t>(c)], p);
        int first = 0;
        while (v[static_cast<std::size_t>(first)] == 0) ++first;
        const Int inv = detail::inv_mod(v[static_cast<std::size_t>(first)], p);
        for (auto& x : v) x = mod(x * inv, p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Monic gcd of f and g reduced mod p, coefficients in [0, p).
inline IntPolynomial poly_gcd_mod_p(const IntPolynomial& f, const IntPolynomial& g,
                                    const Int& p) {
    if (!is_probable_prime(p)) throw argument_error("poly_gcd_mod_p: p must be prime");
    auto reduce = [&p](const IntPolynomial& q) {
        std::vector<Int> c(q.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(q.coeff(static_cast<int>(i)), p);
        return IntPolynomial(std::move(c));
    };
    IntPolynomial a = reduce(f), b = reduce(g);
    if (a.is_zero() && b.is_zero())
        throw numeric_error("poly_gcd_mod_p: both polynomials vanish mod p");
    while (!b.is_zero()) {
        // a mod b over F_p
        std::vector<Int> rem(a.coeffs());
        const Int lead_inv = detail::inv_mod(b.leading(), p);
        for (int d = static_cast<int>(rem.size()) - 1; d >= b.degree(); --d) {
            const Int q = mod(rem[static_cast<std::size_t>(d)] * lead_inv, p);
            if (q == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) {
                auto& slot = rem[static_cast<std::size_t>(d - b.degree() + j)];
                slot = mod(slot - q * b.coeff(j), p);
            }
        }
        a = b;
        b = IntPolynomial(std::move(rem));
        b = reduce(b);
    }
    const Int inv = detail::inv_mod(a.leading(), p);
    std::vector<Int> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(a.coeff(static_cast<int>(i)) * inv, p);
    return IntPolynomial(std::move(c));
}

} // namespace qwalk
