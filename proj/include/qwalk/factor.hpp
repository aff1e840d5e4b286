#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/numeric.hpp"

namespace qwalk {

namespace detail {

/// Primes below 10^6, sieved once on first use.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1'000'000;
        std::vector<bool> comp(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= limit; ++p) {
            if (comp[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = std::uint64_t(p) * p; q <= limit; q += p)
                comp[static_cast<std::size_t>(q)] = true;
        }
        return out;
    }();
    return primes;
}

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = mod(x * x, n);
        if (x == n - 1) return false;
    }
    return true; // witness of compositeness
}

} // namespace detail

/// Miller–Rabin primality test. The fixed witness set {2,3,...,37} is
/// deterministic for n < 3.317e24; beyond that the same witnesses plus a
/// few n-derived bases give a (very) strong probabilistic verdict.
inline bool is_probable_prime(const Int& z) {
    Int n = qwalk::abs(z);
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    }
    Int d = n - 1;
    const unsigned long s = two_adic_valuation(d);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (int p : small)
        if (detail::miller_rabin_witness(n, Int(p), d, s)) return false;
    static const Int deterministic_bound("3317044064679887385961981");
    if (n >= deterministic_bound) {
        // deterministic guarantee lost; stack on derived bases
        for (int i = 1; i <= 8; ++i) {
            Int a = mod(Int(41 + i) + n / (i + 1), n - 3) + 2;
            if (detail::miller_rabin_witness(n, a, d, s)) return false;
        }
    }
    return true;
}

/// Effort bounds for factor_integer. rho_iterations is spent per composite
/// cofactor; exhausting it yields an incomplete factorization rather than
/// an unbounded search.
struct FactorBudget {
    unsigned long trial_limit = 1'000'000;
    unsigned long rho_iterations = 10'000'000;
};

/// Multiset of prime powers with sign. When complete is false, cofactor
/// holds the remaining (composite or unproven) part, and
/// sign * prod(p^e) * cofactor still reproduces the input exactly.
struct Factorization {
    struct Entry {
        Int prime;
        unsigned exponent;
    };
    std::vector<Entry> factors;
    int sign = 1;
    bool complete = true;
    Int cofactor = 1;

    Int reassemble() const {
        Int v = sign;
        for (const auto& f : factors) v *= pow_ui(f.prime, f.exponent);
        return v * cofactor;
    }
};

namespace detail {

/// Brent-cycle Pollard rho with deterministic restart constants c=1,2,...
/// Returns a nontrivial factor of composite n, or 0 when the iteration
/// budget runs out.
inline Int pollard_rho(const Int& n, unsigned long budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    unsigned long spent = 0;
    for (unsigned long c = 1; spent < budget; ++c) {
        Int x = 2, y = 2, q = 1, g = 1, xs = 0;
        unsigned long r = 1, batch = 128;
        auto step = [&](Int& v) { v = mod(v * v + c, n); };
        while (g == 1 && spent < budget) {
            x = y;
            for (unsigned long i = 0; i < r && spent < budget; ++i, ++spent) step(y);
            for (unsigned long k = 0; k < r && g == 1 && spent < budget; k += batch) {
                xs = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim && spent < budget; ++i, ++spent) {
                    step(y);
                    q = mod(q * (x - y), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // batching overshot a factor; replay one step at a time
            g = 1;
            y = xs;
            while (g == 1) {
                step(y);
                Int diff = x - y;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

} // namespace detail

/// Factor z (nonzero): trial division below the budgeted limit, then
/// Pollard rho on what remains, primality via is_probable_prime.
inline Factorization factor_integer(const Int& z, const FactorBudget& budget = {}) {
    if (z == 0) throw numeric_error("factor_integer: zero input");
    Factorization out;
    out.sign = z < 0 ? -1 : 1;
    Int n = qwalk::abs(z);
    std::vector<std::pair<Int, unsigned>> found;
    for (std::uint32_t p : detail::small_primes()) {
        if (p > budget.trial_limit) break;
        if (Int(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n = divexact(n, Int(p));
            ++e;
        }
        if (e) found.emplace_back(Int(p), e);
    }
    std::vector<Int> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (is_probable_prime(c)) {
            found.emplace_back(c, 1u);
            continue;
        }
        Int f = detail::pollard_rho(c, budget.rho_iterations);
        if (f == 0) {
            out.complete = false;
            out.cofactor *= c;
            continue;
        }
        pending.push_back(f);
        pending.push_back(divexact(c, f));
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (!out.factors.empty() && out.factors.back().prime == found[i].first)
            out.factors.back().exponent += found[i].second;
        else
            out.factors.push_back({found[i].first, found[i].second});
    }
    return out;
}

/// Three-valued verdicts for predicates that can exhaust their budget.
enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

/// Is z odd with no repeated prime factor? "unknown" only when the
/// factorization came back incomplete without any repeat in the part that
/// did complete.
inline Tri is_odd_square_free(const Int& z, const FactorBudget& budget = {}) {
    if (z == 0) throw numeric_error("is_odd_square_free: zero input");
    if (mpz_even_p(z.get_mpz_t())) return Tri::no;
    Factorization f = factor_integer(z, budget);
    for (const auto& e : f.factors)
        if (e.exponent >= 2) return Tri::no;
    if (!f.complete) {
        // a square cofactor would also disqualify z
        if (mpz_perfect_square_p(f.cofactor.get_mpz_t())) return Tri::no;
        return Tri::unknown;
    }
    return Tri::yes;
}

} // namespace qwalk
