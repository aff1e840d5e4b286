// qwalk: exact signless-Laplacian walk invariants, rooted-product identity
// checks, spectral-determination certificates and cospectral-mate censuses.
//
// Exit codes: 0 success, 1 identity violation, 2 input parse error,
// 3 internal contradiction, 64 usage error, 65 input over a size cap.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <qwalk/qwalk.hpp>
#include <qwalk/report_json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitUsage = 64;
constexpr int kExitOversize = 65;

struct RunConfig {
    std::string format = "json"; // json | table
    int jobs = 1;
    unsigned long rho_budget = 10'000'000;
    int tower_cap = 64; // direct-verification cap for tower/product conclusions
};

struct InputOptions {
    std::vector<std::string> inline_graphs;
    std::vector<std::string> files;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("-g,--graph6", in.inline_graphs, "inline graph6 word(s)");
    cmd->add_option("-f,--file", in.files,
                    "input file: graph6 words one per line, or an edge list "
                    "(first line \"n m\", then m lines \"i j\")");
}

/// Loads all input graphs; parse problems are collected per line and
/// reported together before exiting with the parse status.
std::vector<qwalk::Graph> load_inputs(const InputOptions& in) {
    std::vector<qwalk::Graph> graphs;
    std::vector<std::string> diagnostics;
    auto try_word = [&](const std::string& word, const std::string& where) {
        try {
            graphs.push_back(qwalk::parse_graph6(word));
        } catch (const qwalk::parse_error& e) {
            diagnostics.push_back(where + ": " + e.what());
        }
    };
    for (const auto& w : in.inline_graphs) try_word(w, "argument '" + w + "'");
    for (const auto& path : in.files) {
        std::ifstream f(path);
        if (!f) {
            diagnostics.push_back(path + ": cannot open");
            continue;
        }
        std::string first;
        std::getline(f, first);
        if (!first.empty() && (std::isdigit(static_cast<unsigned char>(first[0])))) {
            // whole file is one edge list
            std::stringstream rest;
            rest << first << '\n' << f.rdbuf();
            try {
                graphs.push_back(qwalk::parse_edge_list_text(rest.str()));
            } catch (const qwalk::parse_error& e) {
                diagnostics.push_back(path + ": " + e.what());
            }
            continue;
        }
        long line_no = 0;
        std::string line = first;
        do {
            ++line_no;
            while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
                line.pop_back();
            if (!line.empty())
                try_word(line, path + ":" + std::to_string(line_no));
        } while (std::getline(f, line));
    }
    if (!diagnostics.empty()) {
        for (const auto& d : diagnostics) std::cerr << "parse error: " << d << "\n";
        std::exit(kExitParse);
    }
    return graphs;
}

int env_jobs() {
    if (const char* v = std::getenv("QWALK_JOBS")) {
        const int j = std::atoi(v);
        if (j >= 1) return j;
    }
    return 1;
}

/// Runs fn(i) for i < count on a small worker pool; output slots keep input
/// order so the printed stream is identical for any job count.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    const int workers = std::min<std::size_t>(jobs, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            std::size_t i;
            while ((i = next.fetch_add(1)) < count) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                    next.store(count);
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string truncate_int(const qwalk::Int& z) {
    std::string s = qwalk::to_string(z);
    const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
    if (digits <= 40) return s;
    return s.substr(0, 40 + (s[0] == '-' ? 1 : 0)) + "…(" + std::to_string(digits) + "d)";
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::cout << r[c];
            if (c + 1 < r.size())
                std::cout << std::string(width[c] - r[c].size() + 2, ' ');
        }
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------- walk ----

int cmd_walk(const RunConfig& cfg, const InputOptions& in) {
    auto graphs = load_inputs(in);
    std::vector<qwalk::WalkReport> reports(graphs.size());
    parallel_for(graphs.size(), cfg.jobs,
                 [&](std::size_t i) { reports[i] = qwalk::walk_report(graphs[i]); });
    if (cfg.format == "json") {
        for (const auto& r : reports) std::cout << qwalk::to_json(r).dump() << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"graph", "n", "det_WQ", "det_WQtilde", "v2", "a0", "controllable"});
        for (const auto& r : reports)
            rows.push_back({r.graph, std::to_string(r.n), truncate_int(r.det_wq),
                            truncate_int(r.det_wq_tilde),
                            r.v2 ? std::to_string(*r.v2) : "-", truncate_int(r.a0),
                            r.controllable ? "true" : "false"});
        print_table(rows);
    }
    return kExitOk;
}

// ------------------------------------------------------------- certify ----

int cmd_certify(const RunConfig& cfg, const InputOptions& in, const std::string& theorem,
                int k, int t) {
    auto graphs = load_inputs(in);
    qwalk::CertifyOptions opts;
    opts.budget.rho_iterations = cfg.rho_budget;
    opts.direct_cap = cfg.tower_cap;
    std::vector<qwalk::Certificate> certs(graphs.size());
    parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
        const qwalk::Graph& g = graphs[i];
        if (theorem == "4.1")
            certs[i] = qwalk::certify_family(g, opts.budget);
        else if (theorem == "4.4")
            certs[i] = qwalk::certify_rooted(g, k, opts);
        else if (theorem == "4.6")
            certs[i] = qwalk::certify_tower(g, k, t, opts);
        else
            certs[i] = qwalk::certify_p2_family(g, opts.budget);
    });
    if (cfg.format == "json") {
        for (const auto& c : certs) std::cout << qwalk::to_json(c).dump() << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"graph", "certified", "rule", "verdict", "detail"});
        for (const auto& c : certs) {
            std::string detail = c.reason;
            if (c.verdict == qwalk::Verdict::Certified && c.quotient)
                detail = "quotient=" + truncate_int(*c.quotient);
            rows.push_back({c.graph, c.certified, c.theorem,
                            qwalk::to_string(c.verdict), detail});
        }
        print_table(rows);
    }
    return kExitOk;
}

// -------------------------------------------------------------- verify ----

std::pair<int, int> parse_k_range(const std::string& range) {
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
        const int k = std::stoi(range);
        return {k, k};
    }
    return {std::stoi(range.substr(0, dots)), std::stoi(range.substr(dots + 2))};
}

int cmd_verify(const RunConfig& cfg, const InputOptions& in, const std::string& identity,
               int k, int exhaustive_n, const std::string& probe_range, int probe_tower_t,
               double tol) {
    std::vector<qwalk::Graph> graphs;
    if (exhaustive_n > 0)
        graphs = qwalk::enumerate_graphs(exhaustive_n);
    else
        graphs = load_inputs(in);

    if (!probe_range.empty()) {
        auto [k_lo, k_hi] = parse_k_range(probe_range);
        if (k_lo < 2 || k_hi < k_lo) throw qwalk::argument_error("bad --probe-k range");
        struct Row {
            qwalk::json det_probe;
            std::vector<qwalk::json> tower_probes;
        };
        std::vector<std::vector<Row>> out(graphs.size());
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            for (int kk = k_lo; kk <= k_hi; ++kk) {
                Row row;
                row.det_probe = qwalk::to_json(qwalk::verify_det_identity(graphs[i], kk));
                if (probe_tower_t >= 1) {
                    const qwalk::Graph tower = qwalk::rooted_tower(graphs[i], kk, probe_tower_t);
                    qwalk::json tp = qwalk::to_json(qwalk::walk_report(tower));
                    tp["type"] = "tower_probe";
                    tp["seed"] = qwalk::graph_id(graphs[i]);
                    tp["k"] = kk;
                    tp["t"] = probe_tower_t;
                    row.tower_probes.push_back(std::move(tp));
                }
                out[i].push_back(std::move(row));
            }
        });
        for (const auto& rows : out)
            for (const auto& row : rows) {
                std::cout << row.det_probe.dump() << "\n";
                for (const auto& tp : row.tower_probes) std::cout << tp.dump() << "\n";
            }
        return kExitOk; // probes assert nothing
    }

    long violations = 0;
    if (identity == "det") {
        std::vector<qwalk::json> out(graphs.size());
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            out[i] = qwalk::to_json(qwalk::verify_det_identity(graphs[i], k));
        });
        for (const auto& j : out) std::cout << j.dump() << "\n";
    } else if (identity == "charpoly") {
        std::vector<bool> ok(graphs.size());
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            ok[i] = qwalk::verify_charpoly_resultant(graphs[i], k);
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (!ok[i]) ++violations;
            std::cout << qwalk::json{{"schema", qwalk::kReportSchema},
                                     {"type", "charpoly_identity"},
                                     {"graph", qwalk::graph_id(graphs[i])},
                                     {"k", k},
                                     {"equal", static_cast<bool>(ok[i])}}
                             .dump()
                      << "\n";
        }
    } else if (identity == "eigenproduct") {
        std::vector<qwalk::EigenProductCheck> checks(graphs.size());
        parallel_for(graphs.size(), cfg.jobs, [&](std::size_t i) {
            checks[i] = qwalk::verify_det_eigenproduct(graphs[i]);
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (!checks[i].ok(tol)) ++violations;
            qwalk::json j = qwalk::to_json(checks[i]);
            j["graph"] = qwalk::graph_id(graphs[i]);
            j["ok"] = checks[i].ok(tol);
            std::cout << j.dump() << "\n";
        }
    } else {
        throw qwalk::argument_error("--identity must be det, charpoly or eigenproduct");
    }
    std::cerr << graphs.size() << " graphs, " << violations << " violations\n";
    return violations == 0 ? kExitOk : kExitIdentityViolation;
}

// --------------------------------------------------------------- mates ----

int cmd_mates(const RunConfig& cfg, const InputOptions& in, int enumerate_n,
              int cross_validate_n, bool allow_n8) {
    if (cross_validate_n > 0) {
        qwalk::CertifyOptions opts;
        opts.budget.rho_iterations = cfg.rho_budget;
        opts.direct_cap = cfg.tower_cap;
        const auto report = qwalk::cross_validate(cross_validate_n, opts);
        if (cfg.format == "json")
            std::cout << qwalk::to_json(report).dump() << "\n";
        else
            std::cout << "n=" << report.n << " graphs=" << report.graphs
                      << " certified=" << report.certified
                      << " confirmed=" << report.confirmed
                      << " contradictions=" << report.contradictions << "\n";
        return kExitOk;
    }
    std::vector<qwalk::Graph> corpus;
    if (enumerate_n > 0)
        corpus = qwalk::enumerate_graphs(enumerate_n, allow_n8);
    else
        corpus = load_inputs(in);
    const auto groups = qwalk::find_mates(corpus);
    if (cfg.format == "json") {
        std::cout << qwalk::mate_groups_json(groups).dump() << "\n";
    } else {
        std::cout << groups.size() << " mate group(s) among " << corpus.size()
                  << " graph(s)\n";
        for (const auto& group : groups) {
            for (const auto& g : group) std::cout << qwalk::serialize_graph6(g) << " ";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Q-walk matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    cfg.jobs = env_jobs();
    app.add_option("--format", cfg.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", cfg.jobs, "worker threads (default $QWALK_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--rho-budget", cfg.rho_budget, "Pollard-rho iteration budget per composite");
    app.add_option("--tower-cap", cfg.tower_cap,
                   "max vertices for direct re-verification of product/tower conclusions");

    InputOptions walk_in, certify_in, verify_in, mates_in;

    auto* walk = app.add_subcommand("walk", "exact walk-matrix invariants per graph");
    add_input_flags(walk, walk_in);

    auto* certify = app.add_subcommand("certify", "spectral-determination certificates");
    add_input_flags(certify, certify_in);
    std::string theorem;
    int cert_k = 2, cert_t = 1;
    certify->add_option("--theorem", theorem, "certificate rule: 4.1, 4.4, 4.6 or 5.5")
        ->required()
        ->check(CLI::IsMember({"4.1", "4.4", "4.6", "5.5"}));
    certify->add_option("-k", cert_k, "path length for rules 4.4/4.6 (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    certify->add_option("-t", cert_t, "tower depth for rule 4.6")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "exact identity checks and probes");
    add_input_flags(verify, verify_in);
    std::string identity = "det", probe_range;
    int verify_k = 2, exhaustive_n = 0, probe_tower_t = 0;
    double tol = 1e-6;
    verify->add_option("--identity", identity, "det | charpoly | eigenproduct");
    verify->add_option("-k", verify_k, "path length")->check(CLI::Range(2, 1000));
    verify->add_option("--exhaustive-n", exhaustive_n,
                       "run over every isomorphism class on n vertices (n <= 7)");
    verify->add_option("--probe-k", probe_range,
                       "probe mode for a k or k range (e.g. 4..6): report measured "
                       "determinant exponents, assert nothing");
    verify->add_option("--probe-tower-t", probe_tower_t,
                       "with --probe-k: also probe the depth-t tower per k");
    verify->add_option("--tol", tol, "relative tolerance for --identity eigenproduct");

    auto* mates = app.add_subcommand("mates", "cospectral-mate census and oracle validation");
    add_input_flags(mates, mates_in);
    int enumerate_n = 0, cross_validate_n = 0;
    bool allow_n8 = false;
    mates->add_option("--enumerate", enumerate_n, "census over all graphs on n vertices");
    mates->add_option("--cross-validate", cross_validate_n,
                      "check every certificate against the exhaustive oracle (n <= 6)");
    mates->add_flag("--allow-n8", allow_n8, "permit the slow n = 8 enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (walk->parsed()) return cmd_walk(cfg, walk_in);
        if (certify->parsed()) return cmd_certify(cfg, certify_in, theorem, cert_k, cert_t);
        if (verify->parsed())
            return cmd_verify(cfg, verify_in, identity, verify_k, exhaustive_n, probe_range,
                              probe_tower_t, tol);
        if (mates->parsed())
            return cmd_mates(cfg, mates_in, enumerate_n, cross_validate_n, allow_n8);
    } catch (const qwalk::identity_violation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return kExitIdentityViolation;
    } catch (const qwalk::internal_contradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const qwalk::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qwalk::unsupported_error& e) {
        std::cerr << "input over size cap: " << e.what() << "\n";
        return kExitOversize;
    } catch (const qwalk::argument_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qwalk::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    }
    return kExitOk;
}
