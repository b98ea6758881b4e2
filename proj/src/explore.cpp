#include "cluspat/explore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cluspat {

namespace {

std::string ser_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) os << m.at(i, j) << ",";
    return os.str();
}

/// Canonical key of the pair (C, B) under simultaneous column/index
/// permutation: two nodes get equal keys iff some sigma matches both.
std::string canon_key(const IntMatrix& C, const IntMatrix& B) {
    std::string best;
    for (const auto& s : Permutation::all(C.n())) {
        std::string k = ser_matrix(permute_cols(C, s)) + "|" +
                        ser_matrix(permute_rows_cols(B, s));
        if (best.empty() || k < best) best = std::move(k);
    }
    return best;
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

const int64_t kPrimes[] = {101, 103, 107, 109, 113, 127, 131, 137,
                           139, 149, 151, 157, 163, 167, 173, 179};

/// Positive evaluation point for the ambient field: x_j = j + 2, then one
/// distinct prime per semifield generator. Subtraction-free data never
/// vanishes at positive points, so these fingerprints are collision-checked
/// candidates, not proofs.
std::vector<Int> ambient_point(int n, int m) {
    std::vector<Int> p;
    for (int j = 0; j < n; ++j) p.push_back(j + 2);
    for (int l = 0; l < m; ++l) p.push_back(kPrimes[l % 16] + 180 * (l / 16));
    return p;
}

std::string frac_fp(const RationalFn& f, const std::vector<Int>& point) {
    auto [num, den] = f.eval_int(point);
    Int g = int_gcd(num, den);
    if (g != 0) { num /= g; den /= g; }
    if (den < 0) { num = -num; den = -den; }
    return num.str() + "/" + den.str();
}

std::string sf_fp(const SfElem& e, const std::vector<Int>& gen_point) {
    switch (e.kind()) {
    case SfKind::Trivial:
        return "1";
    case SfKind::Tropical: {
        std::ostringstream os;
        for (int64_t v : e.exponents()) os << v << ",";
        return os.str();
    }
    case SfKind::Universal:
        return frac_fp(e.value(), gen_point);
    }
    throw std::logic_error("bad SfKind");
}

/// Enumerate permutations consistent with fingerprint matching
/// (fa[i] = fb[sigma^{-1}(i)]) and return the first that passes `exact`.
bool find_match_sigma(const std::vector<std::string>& fa, const std::vector<std::string>& fb,
                      const std::function<bool(const Permutation&)>& exact,
                      Permutation* out = nullptr) {
    const int n = static_cast<int>(fa.size());
    std::vector<int> img_of_b(n, -1); // sigma(j) for b-index j
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) {
            std::vector<int> img(n);
            for (int j = 0; j < n; ++j) img[j] = img_of_b[j];
            Permutation s(img);
            if (!exact(s)) return false;
            if (out) *out = s;
            return true;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || fb[j] != fa[i]) continue;
            used[j] = true;
            img_of_b[j] = i; // b's slot j maps to a's slot i
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(0);
}

void add(Report& rep, const std::string& identity, const std::string& node, bool ok,
         const std::string& witness = "", Status bad = Status::Fail) {
    rep.push_back({identity, node, ok ? Status::Pass : bad, ok ? "" : witness});
}

const IntMatrix& node_C(const NodeStore& st, const Node& nd) {
    return st.gca ? nd.gfgc.C : nd.fgc.C;
}
const IntMatrix& node_G(const NodeStore& st, const Node& nd) {
    return st.gca ? nd.gfgc.G : nd.fgc.G;
}
const IntMatrix& node_B(const NodeStore& st, const Node& nd) {
    return st.gca ? nd.gfgc.Bt : nd.fgc.Bt;
}

bool d_compatible(const IntMatrix& D, const Permutation& s) {
    for (int i = 0; i < D.n(); ++i)
        if (D.at(s.of(i), s.of(i)) != D.at(i, i)) return false;
    return true;
}

/// Full-object comparison of node a against sigma applied to node b.
/// Everything here is implied by C_a = sigma C_b by proved theorems, except
/// that the coefficient z/x/y matches for GCA are gathered via gbasic1.
void verify_class_match(const NodeStore& st, const Node& a, const Node& b,
                        const Permutation& s, Report& rep) {
    const std::string node = word_label(a.word, a.word.size()) + " vs " +
                             word_label(b.word, b.word.size());
    add(rep, "class-d-compatibility", node, d_compatible(st.D, s),
        "sigma = " + s.to_string());
    if (!st.gca) {
        report_merge(rep, check_detrop_pair(a.fgc, b.fgc, s, node));
        for (size_t c = 0; c < a.seeds.size(); ++c) {
            const Seed& sa = a.seeds[c];
            const Seed sb = permute_seed(b.seeds[c], s);
            bool xok = true, yok = true;
            for (int i = 0; i < sa.n; ++i) {
                if (!sa.x[i].equals(sb.x[i])) xok = false;
                if (!sa.y[i].equals(sb.y[i])) yok = false;
            }
            add(rep, "class-x-match-" + to_string(st.cfg.coeffs[c]), node, xok);
            add(rep, "class-y-match-" + to_string(st.cfg.coeffs[c]), node, yok);
        }
    } else {
        report_merge(rep, check_gca_detrop_pair(a.gfgc, b.gfgc, s, node));
        for (size_t c = 0; c < a.gseeds.size(); ++c) {
            const GCASeed& sa = a.gseeds[c];
            const GCASeed sb = permute_gca_seed(b.gseeds[c], s);
            bool xok = true, yok = true, zok = true;
            for (int i = 0; i < sa.n; ++i) {
                if (!sa.x[i].equals(sb.x[i])) xok = false;
                if (!sa.y[i].equals(sb.y[i])) yok = false;
                for (size_t q = 0; q < sa.z[i].size(); ++q)
                    if (!sa.z[i][q].equals(a.gseeds[c].z[i][q]) ||
                        !sa.z[i][q].equals(b.gseeds[c].z[i][q]))
                        zok = false;
            }
            add(rep, "class-x-match-" + to_string(st.cfg.coeffs[c]), node, xok);
            add(rep, "class-y-match-" + to_string(st.cfg.coeffs[c]), node, yok);
            add(rep, "class-z-match-" + to_string(st.cfg.coeffs[c]), node, zok);
        }
    }
}

Node make_child(const NodeStore& st, const Node& parent, int parent_idx, int k) {
    Node nd;
    nd.word = parent.word;
    nd.word.push_back(k);
    nd.parent = parent_idx;
    nd.via = k;
    if (!st.gca) {
        nd.fgc = mutate_fgc(parent.fgc, k);
        nd.seeds.reserve(parent.seeds.size());
        for (const auto& s : parent.seeds) nd.seeds.push_back(mutate_seed(s, k));
    } else {
        nd.gfgc = mutate_gca_fgc(parent.gfgc, k);
        nd.gseeds.reserve(parent.gseeds.size());
        for (const auto& s : parent.gseeds) nd.gseeds.push_back(mutate_gca_seed(s, k));
    }
    return nd;
}

} // namespace

NodeStore explore(const ExploreConfig& cfg) {
    NodeStore st;
    st.cfg = cfg;
    st.gca = !cfg.R.empty();
    const int n = cfg.B.n();
    if (st.gca) {
        std::vector<Int> rd(cfg.R.begin(), cfg.R.end());
        st.D = skew_symmetrizer(diag_mul(rd, cfg.B));
    } else {
        st.D = skew_symmetrizer(cfg.B);
    }

    Node root;
    root.word = {};
    if (!st.gca) {
        root.fgc = initial_fgc(cfg.B);
        for (auto c : cfg.coeffs) root.seeds.push_back(initial_seed(cfg.B, c));
    } else {
        root.gfgc = initial_gca_fgc(cfg.B, cfg.R);
        for (auto c : cfg.coeffs) root.gseeds.push_back(initial_gca_seed(cfg.B, cfg.R, c));
    }

    std::map<std::string, int> classes; // canonical key -> class id
    auto assign_class = [&](Node& nd) -> bool {
        std::string key = canon_key(node_C(st, nd), node_B(st, nd));
        auto [it, fresh] = classes.emplace(std::move(key), static_cast<int>(st.class_rep.size()));
        nd.cls = it->second;
        if (fresh) {
            st.class_rep.push_back(static_cast<int>(st.nodes.size()));
        } else {
            const Node& rep = st.nodes[st.class_rep[nd.cls]];
            auto s = extract_sigma(node_C(st, nd), node_C(st, rep));
            if (!s) {
                add(st.findings, "class-sigma-extraction",
                    word_label(nd.word, nd.word.size()), false,
                    "canonical keys collide but no column bijection");
            } else {
                verify_class_match(st, nd, rep, *s, st.findings);
            }
        }
        return fresh;
    };

    assign_class(root);
    st.nodes.push_back(std::move(root));

    std::vector<int> frontier{0};
    const bool closure = cfg.depth < 0;
    for (int layer = 1; !frontier.empty(); ++layer) {
        if (!closure && layer > cfg.depth) break;
        // Deterministic task list over the frontier in node order.
        std::vector<std::pair<int, int>> tasks;
        for (int idx : frontier)
            for (int k = 0; k < n; ++k)
                if (k != st.nodes[idx].via) tasks.emplace_back(idx, k);
        if (st.nodes.size() + tasks.size() > cfg.max_nodes) {
            st.truncated = true;
            break;
        }
        std::vector<Node> children(tasks.size());
        const int jobs = std::max(1, cfg.jobs);
        if (jobs == 1 || tasks.size() < 2) {
            for (size_t t = 0; t < tasks.size(); ++t)
                children[t] = make_child(st, st.nodes[tasks[t].first], tasks[t].first,
                                         tasks[t].second);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w)
                pool.emplace_back([&, w] {
                    for (size_t t = w; t < tasks.size(); t += jobs)
                        children[t] = make_child(st, st.nodes[tasks[t].first],
                                                 tasks[t].first, tasks[t].second);
                });
            for (auto& th : pool) th.join();
        }
        // Serial merge in task order keeps class ids and reports deterministic.
        std::vector<int> next;
        bool grew = false;
        for (auto& ch : children) {
            bool fresh = assign_class(ch);
            st.nodes.push_back(std::move(ch));
            grew |= fresh;
            if (!closure || fresh) next.push_back(static_cast<int>(st.nodes.size()) - 1);
        }
        if (closure && !grew) {
            st.closed = true;
            break;
        }
        frontier = std::move(next);
    }
    if (closure && !st.truncated && frontier.empty()) st.closed = true;
    return st;
}

std::vector<PeriodRecord> detect_periods(const NodeStore& store) {
    std::vector<PeriodRecord> out;
    const size_t N = store.nodes.size();
    for (size_t j = 1; j < N; ++j)
        for (size_t i = 0; i < j; ++i) {
            const Node& a = store.nodes[j];
            const Node& b = store.nodes[i];
            if (a.cls != b.cls) continue;
            auto s = extract_sigma(node_C(store, a), node_C(store, b));
            if (!s) continue;
            // Replay both words from scratch and re-check the match.
            bool ok;
            if (!store.gca) {
                FGCSeed ga = initial_fgc(store.cfg.B), gb = ga;
                for (int k : a.word) ga = mutate_fgc(ga, k);
                for (int k : b.word) gb = mutate_fgc(gb, k);
                ok = ga.C == permute_cols(gb.C, *s);
            } else {
                GCAFGCSeed ga = initial_gca_fgc(store.cfg.B, store.cfg.R), gb = ga;
                for (int k : a.word) ga = mutate_gca_fgc(ga, k);
                for (int k : b.word) gb = mutate_gca_fgc(gb, k);
                ok = ga.C == permute_cols(gb.C, *s);
            }
            if (ok) out.push_back({static_cast<int>(j), static_cast<int>(i), *s});
        }
    return out;
}

std::vector<std::string> period_set(const NodeStore& store) {
    std::vector<std::string> out;
    for (const auto& p : detect_periods(store)) {
        const Node& a = store.nodes[p.t1];
        const Node& b = store.nodes[p.t2];
        out.push_back(word_label(a.word, a.word.size()) + "|" +
                      word_label(b.word, b.word.size()) + "|" + p.sigma.to_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report compare_period_sets(const NodeStore& a, const NodeStore& b, const std::string& label) {
    Report rep;
    auto pa = period_set(a), pb = period_set(b);
    // The sigma connecting two nodes may differ between families only through
    // its matrix context; the word pairs themselves must coincide.
    auto strip = [](std::vector<std::string> v) {
        for (auto& s : v) s = s.substr(0, s.rfind('|'));
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    auto wa = strip(pa), wb = strip(pb);
    bool ok = wa == wb;
    std::string w;
    if (!ok) {
        std::vector<std::string> diff;
        std::set_symmetric_difference(wa.begin(), wa.end(), wb.begin(), wb.end(),
                                      std::back_inserter(diff));
        w = "differing period(s): ";
        for (size_t i = 0; i < diff.size() && i < 5; ++i) w += diff[i] + " ";
    }
    add(rep, "period-set-" + label, "", ok, w);
    return rep;
}

Report synchronicity_pairs(const NodeStore& store) {
    Report rep;
    const size_t N = store.nodes.size();
    const int n = store.cfg.B.n();
    const size_t ncoeff = store.cfg.coeffs.size();

    // Fingerprints per node and coefficient pattern.
    struct FP {
        std::vector<std::vector<std::string>> x, y; // [coeff][i]
        std::vector<std::string> xs, ys;            // sorted+joined per coeff
    };
    std::vector<FP> fps(N);
    for (size_t t = 0; t < N; ++t) {
        FP& f = fps[t];
        f.x.resize(ncoeff);
        f.y.resize(ncoeff);
        for (size_t c = 0; c < ncoeff; ++c) {
            int m = store.gca ? store.nodes[t].gseeds[c].m : store.nodes[t].seeds[c].m;
            auto pt = ambient_point(n, m);
            std::vector<Int> gen_pt(pt.begin() + n, pt.end());
            for (int i = 0; i < n; ++i) {
                if (store.gca) {
                    f.x[c].push_back(frac_fp(store.nodes[t].gseeds[c].x[i], pt));
                    f.y[c].push_back(sf_fp(store.nodes[t].gseeds[c].y[i], gen_pt));
                } else {
                    f.x[c].push_back(frac_fp(store.nodes[t].seeds[c].x[i], pt));
                    f.y[c].push_back(sf_fp(store.nodes[t].seeds[c].y[i], gen_pt));
                }
            }
            auto joined = [](std::vector<std::string> v) {
                std::sort(v.begin(), v.end());
                std::string s;
                for (auto& e : v) s += e + ";";
                return s;
            };
            f.xs.push_back(joined(f.x[c]));
            f.ys.push_back(joined(f.y[c]));
        }
    }

    size_t pairs = 0;
    for (size_t j = 1; j < N; ++j)
        for (size_t i = 0; i < j; ++i) {
            ++pairs;
            const Node& a = store.nodes[j];
            const Node& b = store.nodes[i];
            const std::string node = word_label(a.word, a.word.size()) + " vs " +
                                     word_label(b.word, b.word.size());
            auto sC = extract_sigma(node_C(store, a), node_C(store, b));
            auto sG = extract_sigma(node_G(store, a), node_G(store, b));
            if (sC.has_value() != sG.has_value() || (sC && !(*sC == *sG))) {
                add(rep, "sync-c-g-equivalence", node, false,
                    "C and G matches disagree");
                continue;
            }
            if (sC) {
                // Matched pair: x-, y- (and z-) matches must follow.
                verify_class_match(store, a, b, *sC, rep);
                continue;
            }
            // Unmatched pair: probe for x- or y-matches that should not exist.
            for (size_t c = 0; c < ncoeff; ++c) {
                CoeffPattern cp = store.cfg.coeffs[c];
                if (fps[j].xs[c] == fps[i].xs[c]) {
                    auto exact_x = [&](const Permutation& s) {
                        for (int q = 0; q < n; ++q) {
                            const RationalFn& xa =
                                store.gca ? a.gseeds[c].x[q] : a.seeds[c].x[q];
                            const RationalFn& xb = store.gca
                                                       ? b.gseeds[c].x[s.inv_of(q)]
                                                       : b.seeds[c].x[s.inv_of(q)];
                            if (!xa.equals(xb)) return false;
                        }
                        return true;
                    };
                    if (find_match_sigma(fps[j].x[c], fps[i].x[c], exact_x)) {
                        // x-match without C-match: contradicts the CA theorem;
                        // for degree R it contradicts the positivity conjecture.
                        add(rep, "sync-x-without-c-" + to_string(cp), node, false,
                            "x-tuples match but C-matrices do not",
                            store.gca ? Status::Conjecture : Status::Fail);
                    }
                }
                // Trivial coefficients cover nothing: finer y-periodicity is fine.
                if (cp == CoeffPattern::Trivial) continue;
                if (fps[j].ys[c] == fps[i].ys[c]) {
                    auto exact_y = [&](const Permutation& s) {
                        for (int q = 0; q < n; ++q) {
                            const SfElem& ya = store.gca ? a.gseeds[c].y[q] : a.seeds[c].y[q];
                            const SfElem& yb = store.gca ? b.gseeds[c].y[s.inv_of(q)]
                                                         : b.seeds[c].y[s.inv_of(q)];
                            if (!ya.equals(yb)) return false;
                        }
                        return true;
                    };
                    if (find_match_sigma(fps[j].y[c], fps[i].y[c], exact_y)) {
                        add(rep, "sync-y-without-c-" + to_string(cp), node, false,
                            "y-tuples match but C-matrices do not (covering pattern)");
                    }
                }
            }
        }
    add(rep, "synchronicity-pairs", "", true,
        "");
    rep.back().witness = "checked " + std::to_string(pairs) + " pairs";
    return rep;
}

ExchangeGraph build_exchange_graph(const NodeStore& store) {
    ExchangeGraph g;
    g.vertices = static_cast<int>(store.class_rep.size());
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 1; t < store.nodes.size(); ++t) {
        int a = store.nodes[t].cls, b = store.nodes[store.nodes[t].parent].cls;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);

    if (store.gca) {
        add(g.findings, "exchange-graph", "", true, "conjecture checks are CA-only");
        return g;
    }

    // Cluster/seed conjecture checks on class representatives, using the
    // first carried coefficient pattern; exact equality of cluster variables.
    const int n = store.cfg.B.n();
    const size_t c = 0;
    if (store.cfg.coeffs.empty()) return g;
    const int m = store.nodes[0].seeds[c].m;
    auto pt = ambient_point(n, m);

    const int V = g.vertices;
    std::vector<std::vector<std::string>> fp(V);
    for (int v = 0; v < V; ++v) {
        const Node& nd = store.nodes[store.class_rep[v]];
        for (int i = 0; i < n; ++i) fp[v].push_back(frac_fp(nd.seeds[c].x[i], pt));
        std::sort(fp[v].begin(), fp[v].end());
    }
    std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
    for (auto& [x, y] : g.edges) adj[x][y] = adj[y][x] = true;

    auto shared_count = [&](int va, int vb) {
        // Number of common cluster variables, exact comparison behind the
        // fingerprint filter.
        const Node& na = store.nodes[store.class_rep[va]];
        const Node& nb = store.nodes[store.class_rep[vb]];
        int cnt = 0;
        std::vector<bool> used(n, false);
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) {
                if (used[q]) continue;
                if (na.seeds[c].x[i].equals(nb.seeds[c].x[q])) {
                    used[q] = true;
                    ++cnt;
                    break;
                }
            }
        return cnt;
    };

    bool f1a = true, f1c = true;
    std::string f1aw, f1cw;
    for (int va = 0; va < V; ++va)
        for (int vb = va + 1; vb < V; ++vb) {
            int cnt = -1;
            if (fp[va] == fp[vb]) {
                cnt = shared_count(va, vb);
                if (cnt == n && f1a) {
                    f1a = false;
                    f1aw = "classes " + std::to_string(va) + " and " + std::to_string(vb) +
                           " share the whole cluster";
                }
            }
            if (store.closed) {
                // Adjacency <=> exactly n-1 common variables needs the full
                // graph, so only verify it on closed (finite) explorations.
                bool nb = adj[va][vb];
                if (cnt < 0) cnt = shared_count(va, vb);
                if ((cnt == n - 1) != nb && f1c) {
                    f1c = false;
                    f1cw = "classes " + std::to_string(va) + " and " + std::to_string(vb) +
                           " share " + std::to_string(cnt) + " variables, adjacency = " +
                           (nb ? "yes" : "no");
                }
            }
        }
    add(g.findings, "cluster-determines-seed", "", f1a, f1aw);
    if (store.closed) add(g.findings, "adjacency-shared-variables", "", f1c, f1cw);

    // Seed/Y-seed finiteness: Y-seed classes are unions of seed classes, so a
    // closed seed exploration bounds both; report the two counts.
    if (store.closed) {
        std::map<std::string, int> yclasses;
        for (int v = 0; v < V; ++v) {
            const Node& nd = store.nodes[store.class_rep[v]];
            yclasses.emplace(canon_key(node_C(store, nd), node_B(store, nd)), v);
        }
        add(g.findings, "seed-yseed-finiteness", "", true,
            "");
        g.findings.back().witness = std::to_string(V) + " seed classes, <= " +
                                    std::to_string(yclasses.size()) + " Y-seed classes";
    }
    return g;
}

std::string dot_exchange_graph(const NodeStore& store, const ExchangeGraph& g, bool labeled) {
    std::ostringstream os;
    os << "graph exchange {\n  layout=circo;\n";
    for (int v = 0; v < g.vertices; ++v) {
        const Node& nd = store.nodes[store.class_rep[v]];
        os << "  v" << v << " [label=\"" << v;
        if (!nd.word.empty()) os << "\\n" << word_label(nd.word, nd.word.size());
        os << "\"];\n";
    }
    for (auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    if (labeled) {
        std::map<int, PeriodRecord> first_per_class;
        for (const auto& p : detect_periods(store))
            first_per_class.emplace(store.nodes[p.t1].cls, p);
        for (auto& [cls, p] : first_per_class) {
            if (p.sigma.is_identity()) continue;
            os << "  v" << cls << " -- v" << cls << " [label=\"" << p.sigma.to_string()
               << "\", style=dashed, color=blue];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace cluspat
