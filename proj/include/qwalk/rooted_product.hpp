#pragma once

#include <utility>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/int_poly.hpp"

namespace qwalk {

/// Hard cap on constructed product/tower sizes; exact determinant work
/// beyond this is out of desk range anyway.
inline constexpr long kMaxProductVertices = 10'000;

/// Rooted product G∘P_k: a path of k vertices glued by one endpoint onto
/// every vertex of G. Vertices are ordered level-major (the n root
/// vertices first, then the n level-2 vertices, and so on), so the
/// Q-matrix of the result is literally the k x k block tridiagonal form
/// [Q+I, I; I, 2I, I; ...; I, I].
inline Graph rooted_product_path(const Graph& g, int k) {
    if (k < 2) throw argument_error("rooted_product_path: k must be >= 2");
    const int n = g.order();
    if (static_cast<long>(n) * k > kMaxProductVertices)
        throw unsupported_error("rooted_product_path: product exceeds vertex cap");
    GraphBuilder b(n * k);
    for (auto [i, j] : g.edges()) b.add_edge(i, j);
    for (int level = 0; level + 1 < k; ++level)
        for (int i = 0; i < n; ++i) b.add_edge(level * n + i, (level + 1) * n + i);
    return b.take();
}

/// t-fold iterated rooted product G∘P_k^t; t = 0 returns g unchanged.
inline Graph rooted_tower(const Graph& g, int k, int t) {
    if (k < 2) throw argument_error("rooted_tower: k must be >= 2");
    if (t < 0) throw argument_error("rooted_tower: t must be >= 0");
    long size = g.order();
    for (int s = 0; s < t; ++s) {
        size *= k;
        if (size > kMaxProductVertices)
            throw unsupported_error("rooted_tower: tower exceeds vertex cap");
    }
    Graph out = g;
    for (int s = 0; s < t; ++s) out = rooted_product_path(out, k);
    return out;
}

/// Path polynomials driving the product-graph spectrum:
///   a_0 = 1, a_1 = t-1, a_j = (t-2) a_{j-1} - a_{j-2}
///   b_k = (t-1) a_{k-1} - a_{k-2}   (b_0 = 1, b_1 = t-1)
///   f_k = a_0 + ... + a_{k-1}
/// a resp. b are the characteristic polynomials of the path end-matrices
/// A ((k-1)x(k-1)) and B (k x k); all three are monic.
struct PathPolys {
    int k;
    IntPolynomial a; // a_{k-1}, degree k-1
    IntPolynomial b; // b_k, degree k
    IntPolynomial f; // f_k, degree k-1
};

inline PathPolys path_char_polys(int k) {
    if (k < 1) throw argument_error("path_char_polys: k must be >= 1");
    const IntPolynomial tm2({Int(-2), Int(1)});
    std::vector<IntPolynomial> a;
    a.push_back(IntPolynomial::constant(1));      // a_0
    a.push_back(IntPolynomial({Int(-1), Int(1)})); // a_1 = t-1
    for (int j = 2; j <= k; ++j)
        a.push_back(tm2 * a[static_cast<std::size_t>(j - 1)] -
                    a[static_cast<std::size_t>(j - 2)]);
    IntPolynomial b;
    if (k == 1) {
        b = a[1];
    } else {
        const IntPolynomial tm1({Int(-1), Int(1)});
        b = tm1 * a[static_cast<std::size_t>(k - 1)] - a[static_cast<std::size_t>(k - 2)];
    }
    IntPolynomial f;
    for (int j = 0; j < k; ++j) f = f + a[static_cast<std::size_t>(j)];
    return PathPolys{k, a[static_cast<std::size_t>(k - 1)], std::move(b), std::move(f)};
}

/// Coefficients of phi(t) = b_k(t) - lambda a_{k-1}(t), linear in lambda:
/// the t^i coefficient is c_i + d_i * lambda. One Q-eigenvalue lambda of G
/// spawns the k roots of phi as Q-eigenvalues of G∘P_k, so lambda never
/// needs to leave this two-coefficient form.
inline std::vector<std::pair<Int, Int>> phi_coefficients(int k) {
    const PathPolys pp = path_char_polys(k);
    std::vector<std::pair<Int, Int>> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        out[static_cast<std::size_t>(i)] = {pp.b.coeff(i), -pp.a.coeff(i)};
    return out;
}

} // namespace qwalk
