#pragma once

#include <json.hpp>

#include "qwalk/certify.hpp"
#include "qwalk/factor.hpp"
#include "qwalk/identities.hpp"
#include "qwalk/mate_oracle.hpp"
#include "qwalk/walk.hpp"

// JSON serialization of every report type, schema "qwalk-report/1". All
// big integers are emitted as decimal strings: walk determinants outgrow
// 64-bit JSON numbers almost immediately.

namespace qwalk {

inline constexpr const char* kReportSchema = "qwalk-report/1";

using json = nlohmann::json;

/// Coefficient array, constant term first, entries as decimal strings.
inline json to_json(const IntPolynomial& p) {
    json out = json::array();
    for (const Int& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

inline json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& e : f.factors)
        factors.push_back({{"prime", to_string(e.prime)}, {"exponent", e.exponent}});
    json out{{"sign", f.sign}, {"factors", factors}, {"complete", f.complete}};
    if (!f.complete) out["cofactor"] = to_string(f.cofactor);
    return out;
}

inline json to_json(const WalkReport& r) {
    json out{{"schema", kReportSchema},
             {"type", "walk"},
             {"graph", r.graph},
             {"n", r.n},
             {"det_WQ", to_string(r.det_wq)},
             {"det_WQtilde", to_string(r.det_wq_tilde)},
             {"a0", to_string(r.a0)},
             {"controllable", r.controllable}};
    if (r.v2) out["v2"] = *r.v2;
    return out;
}

inline json to_json(const IdentityReport& r) {
    json out{{"schema", kReportSchema},
             {"type", "det_identity"},
             {"graph", r.graph},
             {"n", r.n},
             {"k", r.k},
             {"det_WQ", to_string(r.det_wq)},
             {"a0", to_string(r.a0)},
             {"det_WQ_product", to_string(r.det_wq_product)}};
    if (r.holds) out["holds"] = *r.holds;
    if (r.probe) {
        json p{{"indeterminate", r.probe->indeterminate}};
        if (!r.probe->indeterminate) {
            p["ratio_exact"] = r.probe->ratio_exact;
            if (r.probe->ratio_exact) {
                p["ratio"] = to_string(r.probe->ratio);
                p["exponent"] = r.probe->exponent;
                if (r.probe->exact_exponent) p["exact_exponent"] = *r.probe->exact_exponent;
            }
        }
        out["probe"] = p;
    }
    return out;
}

inline json to_json(const EigenProductCheck& r) {
    return {{"schema", kReportSchema},
            {"type", "eigenproduct"},
            {"det_side", r.det_side},
            {"product_side", r.product_side},
            {"residual", r.residual},
            {"degenerate", r.degenerate}};
}

inline json to_json(const PrimeCondition& pc) {
    json out{{"p", to_string(pc.p)},
             {"p_mod_4", pc.p_mod_4},
             {"passed", pc.passed}};
    if (pc.nullspace_dim >= 0) {
        out["dim_nullspace"] = pc.nullspace_dim;
        out["cond_i"] = pc.cond_i;
        out["cond_ii"] = pc.cond_ii;
        if (pc.nullspace_dim == 1) out["alpha_norm_mod_p"] = to_string(pc.alpha_norm);
    }
    return out;
}

inline json to_json(const Certificate& c) {
    json evidence{{"det_WQ", to_string(c.det_wq)}};
    if (c.quotient_exponent) evidence["quotient_exponent"] = *c.quotient_exponent;
    if (c.quotient) evidence["quotient"] = to_string(*c.quotient);
    if (c.factors) evidence["factors"] = to_json(*c.factors);
    if (c.square_free) evidence["odd_square_free"] = to_string(*c.square_free);
    if (c.a0) evidence["a0"] = to_string(*c.a0);
    if (c.det_wq_tilde) evidence["det_WQtilde"] = to_string(*c.det_wq_tilde);
    if (!c.per_prime.empty()) {
        json pp = json::array();
        for (const auto& pc : c.per_prime) pp.push_back(to_json(pc));
        evidence["per_prime"] = pp;
    }
    if (c.fast_path) evidence["fast_path"] = true;
    if (c.stated_resultant)
        evidence["stated_resultant"] = {{"num", to_string(c.stated_resultant->first)},
                                        {"den", to_string(c.stated_resultant->second)}};
    if (c.predicted_exponent) evidence["predicted_exponent"] = to_string(*c.predicted_exponent);
    if (c.computed_det) evidence["computed_det"] = to_string(*c.computed_det);
    if (c.computed_quotient) evidence["computed_quotient"] = to_string(*c.computed_quotient);

    json out{{"schema", kReportSchema},
             {"type", "certificate"},
             {"graph", c.graph},
             {"certified", c.certified},
             {"theorem", c.theorem},
             {"verdict", to_string(c.verdict)},
             {"n", c.n},
             {"evidence", evidence}};
    if (!c.reason.empty()) out["reason"] = c.reason;
    return out;
}

inline json to_json(const ValidationReport& r) {
    return {{"schema", kReportSchema},
            {"type", "cross_validate"},
            {"n", r.n},
            {"graphs", r.graphs},
            {"certified", r.certified},
            {"confirmed", r.confirmed},
            {"contradictions", r.contradictions}};
}

inline json mate_groups_json(const std::vector<std::vector<Graph>>& groups) {
    json gs = json::array();
    for (const auto& group : groups) {
        json members = json::array();
        for (const Graph& g : group) members.push_back(serialize_graph6(g));
        const SpectrumKey key = gq_spectrum_key(group.front());
        gs.push_back({{"members", members},
                      {"key", {{"p_g", to_json(key.p_g)}, {"p_gc", to_json(key.p_gc)}}}});
    }
    return {{"schema", kReportSchema}, {"type", "mates"}, {"groups", gs}};
}

} // namespace qwalk
