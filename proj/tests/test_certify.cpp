#include <catch2/catch_amalgamated.hpp>

#include <qwalk/certify.hpp>
#include <qwalk/graph6.hpp>
#include <qwalk/mate_oracle.hpp>

#include "oracles.hpp"

using namespace qwalk;
using oracles::complete_graph;
using oracles::kControllableSix;
using oracles::path_graph;

TEST_CASE("family certificate on named graphs") {
    Certificate k1 = certify_family(Graph(1));
    CHECK(k1.verdict == Verdict::Certified);
    CHECK(*k1.quotient == 1);
    CHECK(*k1.quotient_exponent == 0);

    Certificate k3 = certify_family(complete_graph(3));
    CHECK(k3.verdict == Verdict::NotApplicable);
    CHECK(k3.reason == "walk matrix is singular");
}

TEST_CASE("family certificate sweep at n = 6") {
    // exactly the four controllable graphs are members, all with quotient 1
    long certified = 0;
    for (const Graph& g : enumerate_graphs(6)) {
        Certificate c = certify_family(g);
        if (c.verdict == Verdict::Certified) {
            ++certified;
            CHECK(qwalk::abs(*c.quotient) == 1);
            bool known = false;
            for (const auto& fix : kControllableSix) known |= c.graph == fix.g6;
            CHECK(known);
        } else {
            CHECK(c.verdict == Verdict::NotApplicable);
        }
    }
    CHECK(certified == 4);
}

TEST_CASE("family certificate at n = 7 exercises nontrivial quotients") {
    // F?Dlo: det W_Q = 1536 = 2^9 * 3, quotient 3 -> member
    Certificate c = certify_family(parse_graph6("F?Dlo"));
    CHECK(c.verdict == Verdict::Certified);
    CHECK(*c.quotient == 3);
    REQUIRE(c.factors.has_value());
    REQUIRE(c.factors->factors.size() == 1);
    CHECK(c.factors->factors[0].prime == 3);
    CHECK(*c.square_free == Tri::yes);

    // F?Kyg: det W_Q = 15360 = 2^10 * 15, quotient even -> not a member
    Certificate c2 = certify_family(parse_graph6("F?Kyg"));
    CHECK(c2.verdict == Verdict::NotApplicable);
    CHECK(c2.reason == "quotient is even");
}

TEST_CASE("family certificate goes Unknown on exhausted factorization") {
    // synthetic check of the classifier via is_odd_square_free is in
    // test_factor; here the graph-level path: a tiny budget cannot complete
    // on any real 7-vertex member because the quotients are tiny, so pick
    // the smallest budget that still finishes trial division and confirm
    // the verdict stays Certified (budget only matters past 10^6).
    FactorBudget tiny;
    tiny.rho_iterations = 1;
    Certificate c = certify_family(parse_graph6("F?Dlo"), tiny);
    CHECK(c.verdict == Verdict::Certified);
}

TEST_CASE("rooted and tower certificates: premise failures stay NotApplicable") {
    Certificate k1 = certify_rooted(Graph(1), 2);
    CHECK(k1.verdict == Verdict::NotApplicable);
    CHECK(k1.reason == "n is odd");

    Certificate k2 = certify_rooted(complete_graph(2), 2);
    CHECK(k2.verdict == Verdict::NotApplicable); // det W_Q = 0 != 2^2
    CHECK(k2.reason == "|det W_Q| != 2^((3n-2)/2)");

    Certificate t = certify_tower(complete_graph(2), 2, 1);
    CHECK(t.verdict == Verdict::NotApplicable);

    CHECK_THROWS_AS(certify_rooted(Graph(1), 4), argument_error);
    CHECK_THROWS_AS(certify_tower(Graph(1), 2, 0), argument_error);
}

TEST_CASE("no 6-vertex seed meets the power-of-two premise") {
    // |a0| = 2 would need det Q = +-2, but nonzero det Q is divisible by 4,
    // so the rule never fires on real graphs; the sweep proves that for
    // n = 6 and the premise checker is exercised synthetically below.
    long certified = 0;
    for (const Graph& g : enumerate_graphs(6)) {
        if (certify_rooted(g, 2).verdict == Verdict::Certified) ++certified;
        const Int a0 = q_constant_term(g);
        if (a0 != 0) CHECK(mod(a0, 4) == 0);
    }
    CHECK(certified == 0);
}

TEST_CASE("power-of-two premise classifier") {
    using qwalk::detail::power_of_two_premise;
    CHECK(power_of_two_premise(6, two_pow(8), 2).empty());
    CHECK(power_of_two_premise(6, -two_pow(8), -2).empty());
    CHECK(power_of_two_premise(5, two_pow(8), 2) == "n is odd");
    CHECK(power_of_two_premise(6, two_pow(9), 2) == "|det W_Q| != 2^((3n-2)/2)");
    CHECK(power_of_two_premise(6, Int(0), 2) == "|det W_Q| != 2^((3n-2)/2)");
    CHECK(power_of_two_premise(6, two_pow(8), 4) == "|a0| != 2");
}

TEST_CASE("tower exponent prediction") {
    CHECK(tower_predicted_exponent(6, 2, 1) == 17);
    CHECK(tower_predicted_exponent(6, 2, 2) == 35);
    CHECK(tower_predicted_exponent(6, 2, 3) == 71);
    CHECK(tower_predicted_exponent(6, 3, 1) == 26);
    CHECK(tower_predicted_exponent(6, 3, 2) == 80);
}

TEST_CASE("tower constant term tracks the seed") {
    // no assertion path for a0 = 0 seeds
    CHECK(tower_constant_term(Graph(1), 2, 1) == 0); // a0(P2) = 0

    // |a0| is preserved by the rooted product (elimination of the path
    // levels leaves det Q unchanged)
    for (const auto& fix : kControllableSix) {
        const Graph g = parse_graph6(fix.g6);
        for (int k : {2, 3})
            CHECK(qwalk::abs(tower_constant_term(g, k, 1)) == fix.a0);
        CHECK(qwalk::abs(tower_constant_term(g, 2, 2)) == fix.a0);
    }
    for (const Graph& g : enumerate_graphs(4)) {
        const Int dq = det_exact(signless_laplacian(g));
        for (int k : {2, 3})
            CHECK(det_exact(signless_laplacian(rooted_tower(g, k, 1))) == dq);
    }
}

TEST_CASE("p2 certificate premise chain") {
    Certificate k1 = certify_p2_family(Graph(1));
    CHECK(k1.verdict == Verdict::NotApplicable);
    CHECK(k1.reason == "n is odd"); // K1 is in the family but has n = 1

    Certificate k2 = certify_p2_family(complete_graph(2));
    CHECK(k2.verdict == Verdict::NotApplicable);
    CHECK(k2.reason.find("seed not in family") == 0);

    for (const auto& fix : kControllableSix) {
        Certificate c = certify_p2_family(parse_graph6(fix.g6));
        CHECK(c.verdict == Verdict::NotApplicable);
        CHECK(c.reason == "|a0| != 2"); // family member, n even, but a0 in 4Z
    }
}

TEST_CASE("per-prime condition evidence on real 7-vertex instances") {
    // premise-independent evaluation of the two congruence conditions
    auto evaluate = [](const char* g6, long p) {
        const Graph g = parse_graph6(g6);
        return qwalk::detail::evaluate_prime_condition(
            g, modified_q_walk_matrix(g),
            char_poly_exact(signless_laplacian(g)), p);
    };

    // F?Dlo, p=3: alpha = (1,2,0,1,2,2,1), alpha^T alpha = 15 = 0 mod 3,
    // so condition (i) fails; x^2+1 has no root mod 3, so (ii) holds
    PrimeCondition a = evaluate("F?Dlo", 3);
    CHECK(a.nullspace_dim == 1);
    CHECK(a.p_mod_4 == 3);
    CHECK(a.alpha_norm == 0);
    CHECK_FALSE(a.cond_i);
    CHECK(a.cond_ii);
    CHECK_FALSE(a.passed);

    // F?Kyg, p=5: alpha = (1,1,4,3,3,4,4), alpha^T alpha = 3 mod 5; x^2+1
    // has roots {2,3} mod 5 but shares none with the shifted charpoly
    PrimeCondition b = evaluate("F?Kyg", 5);
    CHECK(b.nullspace_dim == 1);
    CHECK(b.p_mod_4 == 1);
    CHECK(b.alpha_norm == 3);
    CHECK(b.cond_i);
    CHECK(b.cond_ii);
    CHECK(b.passed);
}

TEST_CASE("fast path pattern") {
    using qwalk::detail::fast_path_applies;
    auto fact = [](const Int& z) { return factor_integer(z); };
    CHECK(fast_path_applies(fact(2 * 3 * 7 * 11)));
    CHECK(fast_path_applies(fact(-2 * 3 * 7 * 11)));
    CHECK_FALSE(fast_path_applies(fact(2 * 5 * 7)));     // 5 = 1 mod 4
    CHECK_FALSE(fast_path_applies(fact(4 * 3 * 7)));     // 2^2
    CHECK_FALSE(fast_path_applies(fact(2 * 3 * 3 * 7))); // repeated odd prime
    CHECK_FALSE(fast_path_applies(fact(3 * 7)));         // no factor 2
}

TEST_CASE("nullspace lift annihilates the product walk matrix") {
    // located (graph, p) instances with a one-dimensional nullspace: the
    // lifted vectors [alpha;0] and [0;alpha] must be in the nullspace of
    // the product's modified walk transpose
    struct Located {
        const char* g6;
        long p;
    };
    const Located instances[] = {{"F?Dlo", 3}, {"F?Kyg", 3}, {"F?Kyg", 5}};
    for (const auto& inst : instances) {
        const Graph g = parse_graph6(inst.g6);
        const Int p = inst.p;
        const auto basis = nullspace_mod_p(modified_q_walk_matrix(g).transpose(), p);
        REQUIRE(basis.size() == 1);
        const auto& alpha = basis[0];
        const int n = g.order();
        const IntMatrix wt2 = modified_q_walk_matrix(rooted_product_path(g, 2)).transpose();
        for (int half : {0, 1}) {
            std::vector<Int> lifted(static_cast<std::size_t>(2 * n), Int(0));
            for (int i = 0; i < n; ++i)
                lifted[static_cast<std::size_t>(half * n + i)] = alpha[static_cast<std::size_t>(i)];
            const auto image = wt2.mul(lifted);
            for (const Int& x : image) CHECK(mod(x, p) == 0);
        }
    }
}
