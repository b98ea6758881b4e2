#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cluspat/explore.hpp"

using nlohmann::json;
using namespace cluspat;

namespace {

constexpr int kExitCritical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

IntMatrix parse_matrix(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty()) throw CLI::ValidationError("--B", "expected a JSON matrix");
    const int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw CLI::ValidationError("--B", "matrix must be square, row-major");
        for (int c = 0; c < n; ++c) m.at(i, c) = Int(j[i][c].get<long long>());
    }
    return m;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.n(); ++c) row.push_back(m.at(i, c).str());
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> parse_word(const std::string& text, int n) {
    std::vector<int> w;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        int k = std::stoi(tok);
        if (k < 1 || k > n)
            throw CLI::ValidationError("--word", "entries must lie in 1.." + std::to_string(n));
        w.push_back(k - 1);
    }
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1])
            throw CLI::ValidationError(
                "--word", "non-reduced word: position " + std::to_string(i + 1) +
                              " repeats direction " + std::to_string(w[i] + 1) +
                              " (mutation is involutive; drop the adjacent pair)");
    return w;
}

CoeffPattern parse_coeff(const std::string& s) {
    if (s == "trivial") return CoeffPattern::Trivial;
    if (s == "principal") return CoeffPattern::Principal;
    if (s == "y-principal") return CoeffPattern::YPrincipal;
    if (s == "universal") return CoeffPattern::Universal;
    throw CLI::ValidationError("--coeff", "unknown coefficient pattern '" + s + "'");
}

std::vector<std::string> var_names(int n, int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int l = 1; l <= m; ++l) names.push_back("y" + std::to_string(l));
    return names;
}

json report_json(Report rep) {
    std::sort(rep.begin(), rep.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.node, a.identity) < std::tie(b.node, b.identity);
    });
    json out = json::array();
    for (const auto& f : rep) {
        json e{{"identity", f.identity}, {"node", f.node}, {"status", to_string(f.status)}};
        if (!f.witness.empty()) e["witness"] = f.witness;
        out.push_back(e);
    }
    return out;
}

bool has_critical(const Report& rep) {
    for (const auto& f : rep)
        if (f.status == Status::Fail) return true;
    return false;
}

json seed_json(const Seed& s) {
    auto names = var_names(s.n, s.m);
    json x = json::array(), y = json::array();
    for (int i = 0; i < s.n; ++i) {
        x.push_back(s.x[i].to_string(names));
        y.push_back(s.y[i].to_string());
    }
    return json{{"x", x}, {"y", y}, {"B", matrix_json(s.B)}};
}

json gca_seed_json(const GCASeed& s) {
    auto names = var_names(s.n, s.m);
    json x = json::array(), y = json::array(), z = json::array();
    for (int i = 0; i < s.n; ++i) {
        x.push_back(s.x[i].to_string(names));
        y.push_back(s.y[i].to_string());
        json zi = json::array();
        for (const auto& e : s.z[i]) zi.push_back(e.to_string());
        z.push_back(zi);
    }
    return json{{"x", x}, {"y", y}, {"z", z}, {"B", matrix_json(s.B)}};
}

json fgc_json(const FGCSeed& g) {
    json F = json::array();
    for (const auto& f : g.F) F.push_back(f.to_string());
    return json{{"F", F}, {"G", matrix_json(g.G)}, {"C", matrix_json(g.C)},
                {"B", matrix_json(g.Bt)}};
}

json gca_fgc_json(const GCAFGCSeed& g) {
    json F = json::array();
    for (const auto& f : g.F) F.push_back(f.to_string());
    json vf = json::array();
    for (bool b : g.vflip) vf.push_back(b);
    return json{{"F", F}, {"G", matrix_json(g.G)}, {"C", matrix_json(g.C)},
                {"B", matrix_json(g.Bt)}, {"vflip", vf}};
}

struct Options {
    std::string B_text, word_text, coeff = "trivial", suite = "all";
    std::vector<int> R;
    int depth = -1;
    bool closure = false;
    std::string out_path, dot_path;
    int jobs = 1;
    size_t max_nodes = 0;
};

void write_out(const Options& opt, const json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(opt.out_path);
        if (!os) throw std::runtime_error("cannot open " + opt.out_path);
        os << text;
    }
}

/// Per-node identity suites over an explored store; `suite` selects families.
Report run_suites(const NodeStore& st, const std::string& suite) {
    Report rep;
    const bool all = suite == "all";
    for (const auto& nd : st.nodes) {
        const std::string node = word_label(nd.word, nd.word.size());
        if (!st.gca && (all || suite == "ca")) {
            report_merge(rep, check_invariants(nd.fgc, st.D, node));
            report_merge(rep, check_detrop(nd.fgc, node));
            for (size_t c = 0; c < st.cfg.coeffs.size(); ++c) {
                const Seed s0 = initial_seed(st.cfg.B, st.cfg.coeffs[c]);
                auto xs = separation_x(nd.fgc, s0);
                auto ys = separation_y(nd.fgc, s0);
                bool xok = true, yok = true;
                for (int i = 0; i < s0.n; ++i) {
                    if (!xs[i].equals(nd.seeds[c].x[i])) xok = false;
                    if (!ys[i].equals(nd.seeds[c].y[i])) yok = false;
                }
                rep.push_back({"separation-x-" + to_string(st.cfg.coeffs[c]), node,
                               xok ? Status::Pass : Status::Fail, ""});
                rep.push_back({"separation-y-" + to_string(st.cfg.coeffs[c]), node,
                               yok ? Status::Pass : Status::Fail, ""});
            }
        }
        if (st.gca && (all || suite == "gca")) {
            report_merge(rep, check_gca_invariants(nd.gfgc, st.D, node));
            report_merge(rep, check_gca_detrop(nd.gfgc, node));
            for (size_t c = 0; c < st.cfg.coeffs.size(); ++c) {
                const GCASeed s0 = initial_gca_seed(st.cfg.B, st.cfg.R, st.cfg.coeffs[c]);
                auto xs = gca_separation_x(nd.gfgc, s0);
                auto ys = gca_separation_y(nd.gfgc, s0);
                bool xok = true, yok = true;
                for (int i = 0; i < s0.n; ++i) {
                    if (!xs[i].equals(nd.gseeds[c].x[i])) xok = false;
                    if (!ys[i].equals(nd.gseeds[c].y[i])) yok = false;
                }
                rep.push_back({"gca-separation-x-" + to_string(st.cfg.coeffs[c]), node,
                               xok ? Status::Pass : Status::Fail, ""});
                rep.push_back({"gca-separation-y-" + to_string(st.cfg.coeffs[c]), node,
                               yok ? Status::Pass : Status::Fail, ""});
            }
        }
        if (!st.gca && (all || suite == "dualities")) {
            report_merge(rep, check_cross_duality(st.cfg.B, nd.word, CrossDuality::Transposition));
            report_merge(rep, check_cross_duality(st.cfg.B, nd.word, CrossDuality::Chiral));
            report_merge(rep, check_cross_duality(st.cfg.B, nd.word, CrossDuality::Langlands));
        }
        if ((all || suite == "conjugate" || suite == "companions") && !st.cfg.R.empty()) {
            std::vector<Int> rd(st.cfg.R.begin(), st.cfg.R.end());
            IntMatrix RB = diag_mul(rd, st.cfg.B), BR = mul_diag(st.cfg.B, rd);
            if (all || suite == "conjugate")
                report_merge(rep, check_conjugate(RB, BR, st.cfg.R, nd.word));
            if (st.gca && (all || suite == "companions")) {
                FGCSeed left = initial_fgc(RB), right = initial_fgc(BR);
                for (int k : nd.word) {
                    left = mutate_fgc(left, k);
                    right = mutate_fgc(right, k);
                }
                report_merge(rep, companion_check(nd.gfgc, left, right, node));
            }
        }
    }
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for cluster patterns"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> coeff_list;
    auto add_common = [&](CLI::App* sub, bool need_word) {
        sub->add_option("--B", opt.B_text, "exchange matrix, row-major JSON")->required();
        sub->add_option("--R", opt.R, "mutation degrees r_1..r_n (degree-R pattern)");
        sub->add_option("--coeff", coeff_list,
                        "coefficient pattern(s): trivial|principal|y-principal|universal");
        sub->add_option("--word", opt.word_text, "1-based mutation word, comma separated")
            ->required(need_word);
        sub->add_option("--depth", opt.depth, "exploration depth");
        sub->add_flag("--closure", opt.closure, "explore to closure");
        sub->add_option("--suite", opt.suite,
                        "identity suite: ca|gca|dualities|conjugate|companions|all");
        sub->add_option("--out", opt.out_path, "write JSON artifact here (default stdout)");
        sub->add_option("--dot", opt.dot_path, "write DOT graph here");
        sub->add_option("--jobs", opt.jobs, "parallel workers");
        sub->add_option("--max-nodes", opt.max_nodes,
                        "node budget (env CLUSPAT_MAX_NODES overrides the default)");
        return sub;
    };

    auto* mutate = add_common(app.add_subcommand("mutate", "apply a mutation word"), false);
    auto* trace = add_common(app.add_subcommand("trace", "state at every prefix"), true);
    auto* verify = add_common(app.add_subcommand("verify", "identity suites over an exploration"),
                              false);
    auto* periods =
        add_common(app.add_subcommand("period-search", "detect sigma-periods"), false);
    auto* graph =
        add_common(app.add_subcommand("exchange-graph", "exchange graph and checks"), false);
    auto* sync = add_common(app.add_subcommand("synchronicity", "pairwise period agreement"),
                            false);

    app.parse(argc, argv);

    IntMatrix B = parse_matrix(opt.B_text);
    const int n = B.n();
    if (!opt.R.empty() && static_cast<int>(opt.R.size()) != n)
        throw CLI::ValidationError("--R", "needs exactly n entries");
    for (int r : opt.R)
        if (r < 1) throw CLI::ValidationError("--R", "degrees must be >= 1");
    // Validates skew-symmetrizability up front (usage error on failure).
    std::vector<Int> rd(opt.R.begin(), opt.R.end());
    try {
        skew_symmetrizer(opt.R.empty() ? B : diag_mul(rd, B));
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid --B: " << e.what() << "\n";
        return kExitUsage;
    }

    ExploreConfig cfg;
    cfg.B = B;
    cfg.R = opt.R;
    cfg.jobs = opt.jobs;
    if (const char* env = std::getenv("CLUSPAT_MAX_NODES")) cfg.max_nodes = std::stoull(env);
    if (opt.max_nodes > 0) cfg.max_nodes = opt.max_nodes;
    cfg.coeffs.clear();
    for (const auto& s : coeff_list) cfg.coeffs.push_back(parse_coeff(s));
    if (cfg.coeffs.empty())
        cfg.coeffs = {CoeffPattern::Trivial, CoeffPattern::Principal, CoeffPattern::Universal};
    cfg.depth = opt.closure ? -1 : (opt.depth >= 0 ? opt.depth : 4);

    std::vector<int> word = parse_word(opt.word_text, n);

    json doc;
    doc["B"] = matrix_json(B);
    if (!opt.R.empty()) doc["R"] = opt.R;

    if (mutate->parsed() || trace->parsed()) {
        const bool all_prefixes = trace->parsed();
        json states = json::array();
        if (opt.R.empty()) {
            std::vector<Seed> seeds;
            for (auto c : cfg.coeffs) seeds.push_back(initial_seed(B, c));
            FGCSeed fgc = initial_fgc(B);
            for (size_t p = 0; p <= word.size(); ++p) {
                if (p > 0) {
                    for (auto& s : seeds) s = mutate_seed(s, word[p - 1]);
                    fgc = mutate_fgc(fgc, word[p - 1]);
                }
                if (!all_prefixes && p != word.size()) continue;
                json st{{"word", word_label(word, p)}, {"fgc", fgc_json(fgc)}};
                for (size_t c = 0; c < seeds.size(); ++c)
                    st["seed-" + to_string(cfg.coeffs[c])] = seed_json(seeds[c]);
                states.push_back(st);
            }
        } else {
            std::vector<GCASeed> seeds;
            for (auto c : cfg.coeffs) seeds.push_back(initial_gca_seed(B, opt.R, c));
            GCAFGCSeed fgc = initial_gca_fgc(B, opt.R);
            for (size_t p = 0; p <= word.size(); ++p) {
                if (p > 0) {
                    for (auto& s : seeds) s = mutate_gca_seed(s, word[p - 1]);
                    fgc = mutate_gca_fgc(fgc, word[p - 1]);
                }
                if (!all_prefixes && p != word.size()) continue;
                json st{{"word", word_label(word, p)}, {"fgc", gca_fgc_json(fgc)}};
                for (size_t c = 0; c < seeds.size(); ++c)
                    st["seed-" + to_string(cfg.coeffs[c])] = gca_seed_json(seeds[c]);
                states.push_back(st);
            }
        }
        doc["states"] = states;
        write_out(opt, doc);
        return 0;
    }

    // The remaining modes drive an exploration.
    NodeStore st = explore(cfg);
    doc["nodes"] = st.nodes.size();
    doc["classes"] = st.class_rep.size();
    doc["closed"] = st.closed;
    doc["truncated"] = st.truncated;
    if (!st.closed && cfg.depth >= 0)
        doc["horizon"] = "unknown beyond depth " + std::to_string(cfg.depth);

    Report rep = st.findings;
    if (verify->parsed()) report_merge(rep, run_suites(st, opt.suite));
    if (periods->parsed()) {
        json ps = json::array();
        for (const auto& p : detect_periods(st)) {
            ps.push_back({{"word1", word_label(st.nodes[p.t1].word, st.nodes[p.t1].word.size())},
                          {"word2", word_label(st.nodes[p.t2].word, st.nodes[p.t2].word.size())},
                          {"sigma", p.sigma.to_string()}});
        }
        doc["periods"] = ps;
    }
    if (graph->parsed() || !opt.dot_path.empty()) {
        ExchangeGraph g = build_exchange_graph(st);
        report_merge(rep, g.findings);
        doc["graph"] = {{"vertices", g.vertices}, {"edges", g.edges.size()}};
        if (!opt.dot_path.empty()) {
            std::ofstream os(opt.dot_path);
            if (!os) throw std::runtime_error("cannot open " + opt.dot_path);
            os << dot_exchange_graph(st, g, true);
        }
    }
    if (sync->parsed()) report_merge(rep, synchronicity_pairs(st));

    doc["report"] = report_json(rep);
    write_out(opt, doc);
    if (st.truncated) return kExitCapExceeded;
    return has_critical(rep) ? kExitCritical : 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = CLI::App().exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
