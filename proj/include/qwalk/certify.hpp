#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/factor.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/int_poly.hpp"
#include "qwalk/mod_p.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/rooted_product.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Verdict { Certified, NotApplicable, Refuted, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::NotApplicable: return "NotApplicable";
        case Verdict::Refuted: return "Refuted";
        default: return "Unknown";
    }
}

struct CertifyOptions {
    FactorBudget budget{};
    // Largest product/tower order for which conclusions are re-verified by
    // a direct exact determinant; larger certificates stay premise-only.
    int direct_cap = 64;
};

/// Per-prime evidence for the G∘P_2 congruence certificate.
struct PrimeCondition {
    Int p;
    long p_mod_4 = 0;
    int nullspace_dim = -1;
    Int alpha_norm;       // alpha^T alpha mod p, when the nullspace is a line
    bool cond_i = false;  // 1-dimensional nullspace with alpha^T alpha != 0
    bool cond_ii = false; // gcd(x^2+1, 2^n P_Q((x-1)/2)) trivial mod p
    bool passed = false;
};

/// Arithmetic spectral-determination certificate. Certified only when every
/// premise of the selected rule was verified with exact arithmetic; premise
/// failure yields NotApplicable (the rules are sufficient conditions, so
/// nothing follows); Unknown is reserved for exhausted factorizations.
/// Refuted never originates here; only the exhaustive mate search refutes.
struct Certificate {
    std::string theorem; // rule id: "4.1", "4.4", "4.6" or "5.5"
    Verdict verdict = Verdict::NotApplicable;
    std::string graph;     // input (seed) graph
    std::string certified; // graph the verdict speaks about
    std::string reason;    // short explanation for NotApplicable/Unknown

    int n = 0;
    Int det_wq;
    std::optional<long> quotient_exponent;
    std::optional<Int> quotient;
    std::optional<Factorization> factors;
    std::optional<Tri> square_free;
    std::optional<Int> a0;
    std::optional<Int> det_wq_tilde;
    std::vector<PrimeCondition> per_prime;
    bool fast_path = false;
    // literal resultant Res(P_Q(x), (x-1)/2) = num/den, recorded for
    // transparency next to the congruence test actually used
    std::optional<std::pair<Int, Int>> stated_resultant;
    std::optional<Int> predicted_exponent; // 2-adic valuation the rule predicts
    std::optional<Int> computed_det;       // direct recomputation, when under cap
    std::optional<Int> computed_quotient;
};

namespace detail {

inline Tri square_free_verdict(const Factorization& f) {
    for (const auto& e : f.factors)
        if (e.exponent >= 2) return Tri::no;
    if (!f.complete) {
        if (mpz_perfect_square_p(f.cofactor.get_mpz_t())) return Tri::no;
        return Tri::unknown;
    }
    return Tri::yes;
}

/// Premise of the power-of-two rules: n even, |det W_Q| = 2^{(3n-2)/2},
/// |a0| = 2. Returns an empty string when it holds, else the failing part.
inline std::string power_of_two_premise(int n, const Int& det, const Int& a0) {
    if (n % 2 != 0) return "n is odd";
    if (det == 0 || qwalk::abs(det) != two_pow(static_cast<unsigned long>((3 * n - 2) / 2)))
        return "|det W_Q| != 2^((3n-2)/2)";
    if (qwalk::abs(a0) != 2) return "|a0| != 2";
    return {};
}

} // namespace detail

/// Rule 4.1: membership in the family of graphs whose walk determinant,
/// divided by 2^floor((3n-2)/2), is an odd square-free integer.
inline Certificate certify_family(const Graph& g, const FactorBudget& budget = {}) {
    Certificate c;
    c.theorem = "4.1";
    c.graph = c.certified = graph_id(g);
    c.n = g.order();
    c.det_wq = det_exact(q_walk_matrix(g));
    const long e = (3L * c.n - 2) / 2;
    c.quotient_exponent = e;
    if (c.det_wq == 0) {
        c.reason = "walk matrix is singular";
        return c;
    }
    const unsigned long v = two_adic_valuation(c.det_wq);
    if (v < static_cast<unsigned long>(e)) {
        c.reason = "quotient is not an integer";
        return c;
    }
    if (v > static_cast<unsigned long>(e)) {
        c.reason = "quotient is even";
        return c;
    }
    c.quotient = divexact(c.det_wq, two_pow(static_cast<unsigned long>(e)));
    c.factors = factor_integer(*c.quotient, budget);
    c.square_free = detail::square_free_verdict(*c.factors);
    switch (*c.square_free) {
        case Tri::yes:
            c.verdict = Verdict::Certified;
            break;
        case Tri::no:
            c.reason = "quotient is not square-free";
            break;
        case Tri::unknown:
            c.verdict = Verdict::Unknown;
            c.reason = "factorization budget exhausted";
            break;
    }
    return c;
}

/// Rule 4.4: for a seed with n even, |det W_Q| = 2^{(3n-2)/2} and |a0| = 2,
/// the rooted product G∘P_k (k = 2, 3) is certified. The conclusion's
/// quotient (+-1 after dividing by 2^floor((3kn-2)/2)) is re-derived by a
/// direct determinant whenever the product is small enough; disagreement is
/// a hard internal error, not a verdict.
inline Certificate certify_rooted(const Graph& g, int k, const CertifyOptions& opts = {}) {
    if (k != 2 && k != 3) throw argument_error("certify_rooted: k must be 2 or 3");
    Certificate c;
    c.theorem = "4.4";
    c.graph = graph_id(g);
    c.n = g.order();
    c.det_wq = det_exact(q_walk_matrix(g));
    c.a0 = q_constant_term(g);
    const Graph product = rooted_product_path(g, k);
    c.certified = graph_id(product);
    const std::string fail = detail::power_of_two_premise(c.n, c.det_wq, *c.a0);
    if (!fail.empty()) {
        c.reason = fail;
        return c;
    }
    c.verdict = Verdict::Certified;
    const long kn = static_cast<long>(k) * c.n;
    c.quotient_exponent = (3 * kn - 2) / 2;
    if (kn <= opts.direct_cap) {
        c.computed_det = det_exact(q_walk_matrix(product));
        c.computed_quotient =
            divexact(*c.computed_det, two_pow(static_cast<unsigned long>((3 * kn - 2) / 2)));
        if (qwalk::abs(*c.computed_quotient) != 1)
            throw internal_contradiction(
                "certify_rooted: direct quotient of " + c.certified + " is " +
                to_string(*c.computed_quotient) + ", expected +-1");
    } else {
        c.reason = "conclusion not re-verified (product above direct cap)";
    }
    return c;
}

/// 2-adic valuation of det W_Q predicted for the t-fold tower of a rule-4.4
/// seed: 3n 2^{t-1} - 1 for k = 2, (3^{t+1} n - 2)/2 for k = 3.
inline Int tower_predicted_exponent(int n, int k, int t) {
    if (k == 2) return Int(3) * n * two_pow(static_cast<unsigned long>(t - 1)) - 1;
    return divexact(pow_ui(Int(3), static_cast<unsigned long>(t + 1)) * n - 2, 2);
}

/// Rule 4.6: every tower G∘P_k^t (k = 2, 3; t >= 1) over a rule-4.4 seed is
/// certified. Evidence carries the predicted determinant exponent, checked
/// against a direct computation when the tower fits under the cap.
inline Certificate certify_tower(const Graph& g, int k, int t, const CertifyOptions& opts = {}) {
    if (k != 2 && k != 3) throw argument_error("certify_tower: k must be 2 or 3");
    if (t < 1) throw argument_error("certify_tower: t must be >= 1");
    Certificate c;
    c.theorem = "4.6";
    c.graph = graph_id(g);
    c.n = g.order();
    c.det_wq = det_exact(q_walk_matrix(g));
    c.a0 = q_constant_term(g);
    long order = c.n;
    bool under_cap = true;
    for (int s = 0; s < t; ++s) {
        order *= k;
        if (order > kMaxProductVertices) { under_cap = false; break; }
    }
    c.certified = under_cap ? graph_id(rooted_tower(g, k, t))
                            : "tower(" + c.graph + ",k=" + std::to_string(k) +
                                  ",t=" + std::to_string(t) + ")";
    const std::string fail = detail::power_of_two_premise(c.n, c.det_wq, *c.a0);
    if (!fail.empty()) {
        c.reason = fail;
        return c;
    }
    c.verdict = Verdict::Certified;
    c.predicted_exponent = tower_predicted_exponent(c.n, k, t);
    if (under_cap && order <= opts.direct_cap) {
        const Graph tower = rooted_tower(g, k, t);
        c.computed_det = det_exact(q_walk_matrix(tower));
        if (qwalk::abs(*c.computed_det) != two_pow(c.predicted_exponent->get_ui()))
            throw internal_contradiction("certify_tower: tower determinant of " +
                                         c.certified + " does not match predicted 2^" +
                                         to_string(*c.predicted_exponent));
    } else {
        c.reason = "conclusion not re-verified (tower above direct cap)";
    }
    return c;
}

/// Constant charpoly coefficient of the tower Q-matrix, computed directly.
/// When the seed has |a0| = 2 the result must be +-2; any other outcome is
/// a hard error because it would falsify the recursion the tower
/// certificates rest on.
inline Int tower_constant_term(const Graph& g, int k, int t) {
    const Int seed_a0 = q_constant_term(g);
    const Int tower_a0 = q_constant_term(rooted_tower(g, k, t));
    if (qwalk::abs(seed_a0) == 2 && qwalk::abs(tower_a0) != 2)
        throw internal_contradiction("tower_constant_term: seed a0 = " +
                                     to_string(seed_a0) + " but tower a0 = " +
                                     to_string(tower_a0));
    return tower_a0;
}

namespace detail {

/// Evidence for one odd prime p | det(modified walk matrix): nullspace
/// dimension and generator norm, plus the congruence condition that x^2+1
/// and the denominator-cleared charpoly 2^n P_Q((x-1)/2) stay coprime
/// mod p.
inline PrimeCondition evaluate_prime_condition(const Graph& g, const IntMatrix& wt,
                                               const IntPolynomial& pq, const Int& p) {
    PrimeCondition pc;
    pc.p = p;
    pc.p_mod_4 = static_cast<long>(mod(p, 4).get_ui());
    const auto basis = nullspace_mod_p(wt.transpose(), p);
    pc.nullspace_dim = static_cast<int>(basis.size());
    if (pc.nullspace_dim == 1) {
        Int norm = 0;
        for (const Int& x : basis[0]) norm += x * x;
        pc.alpha_norm = mod(norm, p);
        pc.cond_i = pc.alpha_norm != 0;
    }
    const int n = g.order();
    IntPolynomial shifted; // 2^n P_Q((x-1)/2) = sum_i c_i 2^{n-i} (x-1)^i
    const IntPolynomial xm1({Int(-1), Int(1)});
    IntPolynomial xm1_pow = IntPolynomial::constant(1);
    for (int i = 0; i <= n; ++i) {
        shifted = shifted +
                  Int(pq.coeff(i) * two_pow(static_cast<unsigned long>(n - i))) * xm1_pow;
        if (i < n) xm1_pow = xm1_pow * xm1;
    }
    const IntPolynomial x2p1({Int(1), Int(0), Int(1)});
    const IntPolynomial gcd = poly_gcd_mod_p(x2p1, shifted, p);
    pc.cond_ii = gcd.degree() == 0;
    pc.passed = pc.cond_i && pc.cond_ii;
    return pc;
}

/// Fast certification pattern: det(modified walk matrix) = +-2 p_1...p_t
/// with distinct odd primes, all congruent to 3 mod 4.
inline bool fast_path_applies(const Factorization& f) {
    if (!f.complete) return false;
    bool saw_two = false;
    for (const auto& e : f.factors) {
        if (e.prime == 2) {
            if (e.exponent != 1) return false;
            saw_two = true;
        } else {
            if (e.exponent != 1) return false;
            if (mod(e.prime, 4) != 3) return false;
        }
    }
    return saw_two;
}

} // namespace detail

/// Rule 5.5: for a family member with n even and |a0| = 2, the rooted
/// product G∘P_2 is certified when, for every odd prime p dividing the
/// modified walk determinant, the nullspace of its transpose mod p is a
/// line spanned by some alpha with alpha^T alpha != 0, and x^2+1 shares no
/// root with 2^n P_Q((x-1)/2) mod p. p = 2 never needs checking. The
/// all-primes-3-mod-4 pattern certifies directly without per-prime work
/// unless force_full is set.
inline Certificate certify_p2_family(const Graph& g, const FactorBudget& budget = {},
                                     bool force_full = false) {
    Certificate c;
    c.theorem = "5.5";
    c.graph = graph_id(g);
    c.n = g.order();

    const Certificate fam = certify_family(g, budget);
    c.det_wq = fam.det_wq;
    c.certified = graph_id(rooted_product_path(g, 2));
    if (fam.verdict == Verdict::Unknown) {
        c.verdict = Verdict::Unknown;
        c.reason = "family membership unresolved: " + fam.reason;
        return c;
    }
    if (fam.verdict != Verdict::Certified) {
        c.reason = "seed not in family: " + fam.reason;
        return c;
    }
    if (c.n % 2 != 0) {
        c.reason = "n is odd";
        return c;
    }
    c.a0 = q_constant_term(g);
    if (qwalk::abs(*c.a0) != 2) {
        c.reason = "|a0| != 2";
        return c;
    }

    const IntMatrix wt = modified_q_walk_matrix(g);
    c.det_wq_tilde = det_exact(wt);
    c.factors = factor_integer(*c.det_wq_tilde, budget);
    const IntPolynomial pq = char_poly_exact(signless_laplacian(g));
    c.stated_resultant = {Int((c.n % 2 == 0 ? 1 : -1) * pq.eval(1)),
                          two_pow(static_cast<unsigned long>(c.n))};
    if (!c.factors->complete) {
        c.verdict = Verdict::Unknown;
        c.reason = "factorization budget exhausted on det of modified walk matrix";
        return c;
    }

    if (!force_full && detail::fast_path_applies(*c.factors)) {
        c.fast_path = true;
        c.verdict = Verdict::Certified;
        for (const auto& e : c.factors->factors) {
            if (e.prime == 2) continue;
            PrimeCondition pc;
            pc.p = e.prime;
            pc.p_mod_4 = 3;
            pc.passed = true;
            c.per_prime.push_back(std::move(pc));
        }
        return c;
    }

    bool all_passed = true;
    for (const auto& e : c.factors->factors) {
        if (e.prime == 2) continue;
        PrimeCondition pc = detail::evaluate_prime_condition(g, wt, pq, e.prime);
        if (!pc.passed && all_passed) {
            all_passed = false;
            c.reason = "prime " + to_string(pc.p) + " fails condition " +
                       (pc.cond_i ? "(ii)" : "(i)");
        }
        c.per_prime.push_back(std::move(pc));
    }
    if (all_passed) c.verdict = Verdict::Certified;
    return c;
}

} // namespace qwalk
