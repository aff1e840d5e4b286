#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qwalk/canonical.hpp"
#include "qwalk/certify.hpp"
#include "qwalk/error.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph6.hpp"
#include "qwalk/int_poly.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Exact fingerprint of the generalized Q-spectrum: the integer
/// characteristic polynomials of Q(G) and Q of the complement. Equal keys
/// mean equal spectra with multiplicities, with no tolerance policy.
struct SpectrumKey {
    IntPolynomial p_g;
    IntPolynomial p_gc;

    bool operator==(const SpectrumKey&) const = default;

    std::string to_string() const {
        std::string s;
        for (const Int& c : p_g.coeffs()) s += qwalk::to_string(c) + ",";
        s += "|";
        for (const Int& c : p_gc.coeffs()) s += qwalk::to_string(c) + ",";
        return s;
    }
};

inline SpectrumKey gq_spectrum_key(const Graph& g) {
    return {char_poly_exact(signless_laplacian(g)),
            char_poly_exact(signless_laplacian(g.complement()))};
}

/// Groups of two or more pairwise non-isomorphic graphs sharing a spectrum
/// key. Corpus members are deduplicated by canonical form first; groups and
/// members come back sorted by canonical graph6 word.
inline std::vector<std::vector<Graph>> find_mates(const std::vector<Graph>& corpus) {
    std::map<std::string, std::map<std::string, Graph>> by_key;
    for (const Graph& g : corpus) {
        if (g.order() > 10)
            throw unsupported_error("find_mates: corpus members must have n <= 10");
        Graph canon = canonical_form(g);
        std::string word = serialize_graph6(canon);
        by_key[gq_spectrum_key(g).to_string()].emplace(std::move(word), std::move(canon));
    }
    std::vector<std::vector<Graph>> groups;
    for (auto& [key, members] : by_key) {
        if (members.size() < 2) continue;
        std::vector<Graph> group;
        group.reserve(members.size());
        for (auto& [word, g] : members) group.push_back(std::move(g));
        groups.push_back(std::move(group));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return serialize_graph6(a.front()) < serialize_graph6(b.front());
    });
    return groups;
}

namespace detail {

struct SpectrumCensus {
    std::vector<Graph> graphs;      // canonical representatives, sorted
    std::vector<std::string> keys;  // spectrum key per representative
};

/// Keys of every isomorphism class on n vertices, computed once per order.
inline const SpectrumCensus& spectrum_census(int n, bool allow_n8 = false) {
    static std::map<int, SpectrumCensus> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        SpectrumCensus c;
        c.graphs = enumerate_graphs(n, allow_n8);
        c.keys.reserve(c.graphs.size());
        for (const Graph& g : c.graphs) c.keys.push_back(gq_spectrum_key(g).to_string());
        it = cache.emplace(n, std::move(c)).first;
    }
    return it->second;
}

} // namespace detail

/// Ground truth by exhaustion: true iff no non-isomorphic graph on the same
/// order shares g's generalized Q-spectrum. Capped at n <= 7 (n = 8 via the
/// opt-in flag).
inline bool brute_force_dgqs(const Graph& g, bool allow_n8 = false) {
    const int n = g.order();
    const auto& census = detail::spectrum_census(n, allow_n8); // size errors surface here
    const std::string key = gq_spectrum_key(g).to_string();
    const Graph canon = canonical_form(g);
    for (std::size_t i = 0; i < census.graphs.size(); ++i)
        if (census.keys[i] == key && !(census.graphs[i] == canon)) return false;
    return true;
}

/// Certificates checked against the exhaustive oracle over one order.
struct ValidationReport {
    int n = 0;
    long graphs = 0;
    long certified = 0;     // Certified verdicts across all rules
    long confirmed = 0;     // those whose target graph the oracle could check
    long contradictions = 0; // always 0 on return; a hit throws instead
};

/// Runs every certificate over all graphs of order n and cross-checks each
/// Certified verdict whose target fits the oracle domain (order <= 7). A
/// Certified graph the oracle refutes is a soundness break: it throws
/// internal_contradiction naming the graph6 word.
inline ValidationReport cross_validate(int n, const CertifyOptions& opts = {}) {
    if (n > 6) throw unsupported_error("cross_validate: capped at n <= 6");
    ValidationReport report;
    report.n = n;
    const auto& census = detail::spectrum_census(n);
    report.graphs = static_cast<long>(census.graphs.size());

    auto account = [&](const Certificate& c, const Graph& target) {
        if (c.verdict != Verdict::Certified) return;
        ++report.certified;
        if (target.order() > 7) return;
        if (!brute_force_dgqs(target)) {
            ++report.contradictions;
            throw internal_contradiction("cross_validate: rule " + c.theorem +
                                         " certified " + serialize_graph6(target) +
                                         " (seed " + c.graph +
                                         ") but an exhaustive mate search refutes it");
        }
        ++report.confirmed;
    };

    for (const Graph& g : census.graphs) {
        account(certify_family(g, opts.budget), g);
        for (int k : {2, 3}) {
            account(certify_rooted(g, k, opts), rooted_product_path(g, k));
            for (int t : {1, 2})
                account(certify_tower(g, k, t, opts), rooted_tower(g, k, t));
        }
        account(certify_p2_family(g, opts.budget), rooted_product_path(g, 2));
    }
    return report;
}

} // namespace qwalk
