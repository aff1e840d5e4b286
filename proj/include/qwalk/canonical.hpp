#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

namespace detail {

/// Upper-triangle bitmask of a small graph, column-major pair order with
/// the (0,1) bit most significant. With this layout, numeric mask order
/// equals lexicographic graph6 word order for a fixed n.
inline std::uint64_t triangle_mask(const Graph& g) {
    const int n = g.order();
    const int m = n * (n - 1) / 2;
    std::uint64_t mask = 0;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(i, j)) mask |= std::uint64_t(1) << (m - 1 - idx);
    return mask;
}

inline Graph graph_from_triangle_mask(int n, std::uint64_t mask) {
    const int m = n * (n - 1) / 2;
    GraphBuilder b(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((mask >> (m - 1 - idx)) & 1) b.add_edge(i, j);
    return b.take();
}

/// Branch-and-bound search for the minimal triangle mask over all vertex
/// relabelings. Positions are filled left to right; once position d is
/// assigned, all bits in columns <= d are fixed, so any branch whose prefix
/// already exceeds the best known full mask is cut.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        m_ = n_ * (n_ - 1) / 2;
        pos_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
        best_ = ~std::uint64_t(0);
    }

    std::uint64_t run() {
        descend(0, 0);
        return best_;
    }

private:
    void descend(int d, std::uint64_t acc) {
        if (d == n_) {
            if (acc < best_) best_ = acc;
            return;
        }
        const int tcur = d * (d + 1) / 2;           // pairs fixed after this level
        const int shift = m_ - tcur;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            std::uint64_t acc2 = acc;
            for (int i = 0; i < d; ++i)
                if (g_.has_edge(pos_[static_cast<std::size_t>(i)], v))
                    acc2 |= std::uint64_t(1) << (m_ - 1 - (d * (d - 1) / 2 + i));
            if (shift < 64 && (acc2 >> shift) > (best_ >> shift)) continue;
            used_[static_cast<std::size_t>(v)] = true;
            pos_[static_cast<std::size_t>(d)] = v;
            descend(d + 1, acc2);
            used_[static_cast<std::size_t>(v)] = false;
        }
    }

    const Graph& g_;
    int n_, m_;
    std::vector<int> pos_;
    std::vector<bool> used_;
    std::uint64_t best_;
};

} // namespace detail

/// Lexicographically minimal adjacency encoding of g over all vertex
/// permutations; equal canonical forms characterize isomorphism. Brute
/// force with prefix pruning, capped at n <= 10.
inline Graph canonical_form(const Graph& g) {
    if (g.order() > 10)
        throw unsupported_error("canonical_form: brute-force search capped at n <= 10");
    if (g.order() == 1) return g;
    detail::CanonicalSearch search(g);
    return detail::graph_from_triangle_mask(g.order(), search.run());
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.order() > 10)
        throw unsupported_error("are_isomorphic: capped at n <= 10");
    if (g.edge_count() != h.edge_count()) return false;
    auto degs = [](const Graph& x) {
        std::vector<int> d(static_cast<std::size_t>(x.order()));
        for (int i = 0; i < x.order(); ++i) d[static_cast<std::size_t>(i)] = x.degree(i);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

/// One representative per isomorphism class of simple graphs on n
/// vertices, sorted by canonical graph6 word. Generates all labeled graphs
/// and sweeps orbits: each unvisited mask, taken in increasing order, is
/// the minimal (hence canonical) member of a fresh class, and its whole
/// orbit is marked by applying every vertex permutation.
///
/// n = 8 (12346 classes, 2^28 labeled graphs) is feasible but slow, so it
/// sits behind the allow_n8 opt-in; the public contract is n <= 7.
inline std::vector<Graph> enumerate_graphs(int n, bool allow_n8 = false) {
    if (n < 1) throw argument_error("enumerate_graphs: n must be >= 1");
    const int cap = allow_n8 ? 8 : 7;
    if (n > cap)
        throw unsupported_error("enumerate_graphs: exhaustive sweep capped at n <= " +
                                std::to_string(cap));
    if (n == 1) return {Graph(1)};
    const int m = n * (n - 1) / 2;

    std::vector<std::array<std::uint8_t, 28>> bitmaps;
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            std::array<std::uint8_t, 28> map{};
            int idx = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++idx) {
                    int pi = perm[static_cast<std::size_t>(i)];
                    int pj = perm[static_cast<std::size_t>(j)];
                    if (pi > pj) std::swap(pi, pj);
                    const int target = pj * (pj - 1) / 2 + pi;
                    map[static_cast<std::size_t>(m - 1 - idx)] =
                        static_cast<std::uint8_t>(m - 1 - target);
                }
            bitmaps.push_back(map);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<bool> visited(std::size_t(1) << m, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        if (visited[mask]) continue;
        out.push_back(detail::graph_from_triangle_mask(n, mask));
        for (const auto& map : bitmaps) {
            std::uint32_t img = 0, rest = mask;
            while (rest) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint32_t(1) << map[static_cast<std::size_t>(b)];
            }
            visited[img] = true;
        }
    }
    return out;
}

} // namespace qwalk
