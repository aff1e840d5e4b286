#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// Simple undirected graph on vertices 0..n-1. Adjacency is a symmetric,
/// irreflexive bitset; instances are immutable once constructed.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_((n + 63) / 64) {
        if (n < 1) throw argument_error("Graph: vertex count must be >= 1");
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [i, j] : edges) {
            if (i < 0 || j < 0 || i >= n || j >= n)
                throw argument_error("from_edge_list: vertex index out of range");
            if (i == j) throw argument_error("from_edge_list: loop edge");
            g.set_edge(i, j);
        }
        return g;
    }

    int order() const { return n_; }

    bool has_edge(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }

    int degree(int i) const {
        int d = 0;
        const std::uint64_t* r = row(i);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    long edge_count() const {
        long s = 0;
        for (int i = 0; i < n_; ++i) s += degree(i);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) out.emplace_back(i, j);
        return out;
    }

    Graph complement() const {
        Graph g(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!has_edge(i, j)) g.set_edge(i, j);
        return g;
    }

    /// Label-sensitive equality (same order, identical adjacency).
    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    void set_edge(int i, int j) {
        mutable_row(i)[j >> 6] |= std::uint64_t(1) << (j & 63);
        mutable_row(j)[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    const std::uint64_t* row(int i) const {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }
    std::uint64_t* mutable_row(int i) {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;

    friend Graph parse_graph6(const std::string&);
    friend class GraphBuilder;
};

/// Incremental construction helper for library internals (rooted products,
/// enumeration). Public call sites should use Graph::from_edge_list.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int i, int j) { g_.set_edge(i, j); }
    Graph take() { return std::move(g_); }

private:
    Graph g_;
};

inline IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) a(i, j) = 1;
    return a;
}

/// Q(G) = D(G) + A(G): degree diagonal plus adjacency.
inline IntMatrix signless_laplacian(const Graph& g) {
    const int n = g.order();
    IntMatrix q(n, n);
    for (int i = 0; i < n; ++i) {
        q(i, i) = g.degree(i);
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) q(i, j) = 1;
    }
    return q;
}

/// Plain-text edge list: first line "n m", then one "i j" line per edge.
inline std::string to_edge_list_text(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto [i, j] : es) os << i << ' ' << j << '\n';
    return os.str();
}

inline Graph parse_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    long n = -1, m = -1;
    if (!(is >> n >> m) || n < 1 || m < 0)
        throw parse_error("edge list: expected header 'n m'", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e) {
        long i, j;
        if (!(is >> i >> j)) {
            const auto pos = static_cast<long>(is.tellg());
            throw parse_error("edge list: expected " + std::to_string(m) + " edges",
                              pos < 0 ? text.size() : static_cast<std::size_t>(pos));
        }
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const argument_error& e) {
        throw parse_error(std::string("edge list: ") + e.what(), 0);
    }
}

} // namespace qwalk
