#pragma once

#include <string>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

/// Parse a short-form graph6 word (n <= 62): one size byte chr(63+n), then
/// the upper triangle in column-major order, six bits per printable byte,
/// zero-padded. Strict: bad bytes, wrong length and nonzero padding are all
/// rejected with the offending byte offset.
inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("graph6: empty input", 0);
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw parse_error("graph6: long form (n > 62) unsupported", 0);
    if (first < 63 || first > 126) throw parse_error("graph6: malformed size byte", 0);
    const int n = first - 63;
    if (n < 1) throw parse_error("graph6: empty graph (n = 0) unsupported", 0);
    const int nbits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != expect)
        throw parse_error("graph6: length mismatch, expected " +
                              std::to_string(expect) + " bytes, got " +
                              std::to_string(text.size()),
                          text.size() < expect ? text.size() : expect);
    Graph g(n);
    int idx = 0, i = 0, j = 1; // column-major: (0,1), (0,2),(1,2), (0,3),...
    for (std::size_t b = 1; b < text.size(); ++b) {
        const unsigned char c = static_cast<unsigned char>(text[b]);
        if (c < 63 || c > 126) throw parse_error("graph6: malformed data byte", b);
        const int v = c - 63;
        for (int bit = 5; bit >= 0; --bit) {
            const bool set = (v >> bit) & 1;
            if (idx >= nbits) {
                if (set) throw parse_error("graph6: nonzero padding bit", b);
                continue;
            }
            if (set) g.set_edge(i, j);
            ++idx;
            if (++i == j) { i = 0; ++j; }
        }
    }
    return g;
}

/// Canonical short-form graph6 word for g (labels as given).
inline std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw unsupported_error("graph6: n > 62 needs the edge-list format");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out += static_cast<char>(63 + acc);
                acc = nacc = 0;
            }
        }
    }
    if (nacc > 0) out += static_cast<char>(63 + (acc << (6 - nacc)));
    return out;
}

} // namespace qwalk
