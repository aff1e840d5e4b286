#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/canonical.hpp"
#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph6.hpp"
#include "qwalk/int_matrix.hpp"
#include "qwalk/int_poly.hpp"
#include "qwalk/numeric.hpp"

namespace qwalk {

namespace detail {

/// w <- Q(g) v without forming Q: (Qv)_i = deg(i) v_i + sum of v over
/// neighbours of i.
inline std::vector<Int> q_apply(const Graph& g, const std::vector<Int>& v) {
    const int n = g.order();
    std::vector<Int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int acc = Int(g.degree(i)) * v[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (j != i && g.has_edge(i, j)) acc += v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace detail

/// Stable identifier for reports: canonical graph6 when the isomorphism
/// search is feasible (n <= 10), plain graph6 up to n = 62, and a hash of
/// the edge-list text beyond that.
inline std::string graph_id(const Graph& g) {
    if (g.order() <= 10) return serialize_graph6(canonical_form(g));
    if (g.order() <= 62) return serialize_graph6(g);
    char buf[32];
    std::snprintf(buf, sizeof buf, "elh:%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(to_edge_list_text(g))));
    return buf;
}

/// Q-walk matrix W_Q(G) = [e, Qe, ..., Q^{n-1}e], built column by column
/// with matrix-vector products (powers of Q are never formed).
inline IntMatrix q_walk_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix w(n, n);
    std::vector<Int> col(static_cast<std::size_t>(n), Int(1));
    for (int j = 0; j < n; ++j) {
        if (j > 0) col = detail::q_apply(g, col);
        for (int i = 0; i < n; ++i) w(i, j) = col[static_cast<std::size_t>(i)];
    }
    return w;
}

/// Modified walk matrix [e, Qe/2, ..., Q^{n-1}e/2]. Every column past the
/// first is even because Qe is twice the degree vector, so the halving is
/// exact; a failure here can only mean a construction bug.
inline IntMatrix modified_q_walk_matrix(const Graph& g) {
    IntMatrix w = q_walk_matrix(g);
    for (int j = 1; j < w.cols(); ++j)
        for (int i = 0; i < w.rows(); ++i) {
            if (mpz_odd_p(w(i, j).get_mpz_t()))
                throw internal_contradiction("modified_q_walk_matrix: odd column entry");
            w(i, j) = divexact(w(i, j), 2);
        }
    return w;
}

/// Constant term of the characteristic polynomial of Q(G); equals
/// (-1)^n det Q(G).
inline Int q_constant_term(const Graph& g) {
    return char_poly_exact(signless_laplacian(g)).coeff(0);
}

/// Exact walk invariants of one graph.
struct WalkReport {
    std::string graph;
    int n = 0;
    Int det_wq;
    Int det_wq_tilde;
    std::optional<unsigned long> v2; // absent when det_wq = 0
    Int a0;
    bool controllable = false;
};

inline WalkReport walk_report(const Graph& g) {
    WalkReport r;
    r.graph = graph_id(g);
    r.n = g.order();
    r.det_wq = det_exact(q_walk_matrix(g));
    r.det_wq_tilde = det_exact(modified_q_walk_matrix(g));
    if (r.det_wq != 0) r.v2 = two_adic_valuation(r.det_wq);
    r.a0 = q_constant_term(g);
    r.controllable = r.det_wq != 0;
    return r;
}

} // namespace qwalk
