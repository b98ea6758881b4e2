#include "cluspat/fgc.hpp"

#include <sstream>
#include <stdexcept>

namespace cluspat {

namespace {

int64_t pos(const Int& v) { return v > 0 ? static_cast<int64_t>(v) : 0; }

void add(Report& rep, const std::string& identity, const std::string& node, bool ok,
         const std::string& witness = "") {
    rep.push_back({identity, node, ok ? Status::Pass : Status::Fail, ok ? "" : witness});
}

} // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Conjecture: return "conjecture";
    }
    throw std::logic_error("bad Status");
}

bool report_ok(const Report& r) {
    for (const auto& f : r)
        if (f.status == Status::Fail) return false;
    return true;
}

void report_merge(Report& a, Report b) {
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
}

std::string word_label(const std::vector<int>& word, size_t len) {
    std::ostringstream os;
    for (size_t i = 0; i < len; ++i) {
        if (i) os << ",";
        os << word[i] + 1;
    }
    return os.str();
}

FGCSeed initial_fgc(const IntMatrix& B) {
    const int n = B.n();
    FGCSeed g;
    g.F.assign(n, LaurentPoly::one(n));
    g.G = g.C = IntMatrix::identity(n);
    g.Bt = g.B0 = B;
    return g;
}

FGCSeed mutate_fgc(const FGCSeed& g, int k) {
    const int n = g.n();
    if (k < 0 || k >= n) throw std::out_of_range("mutate_fgc: direction out of range");
    FGCSeed r = g;

    // M_k = prod_j u_j^{[c_jk]+} F_j^{[b_jk]+}  +  prod_j u_j^{[-c_jk]+} F_j^{[-b_jk]+}
    ExpVec ep(n, 0), em(n, 0);
    LaurentPoly tp = LaurentPoly::one(n), tm = LaurentPoly::one(n);
    for (int j = 0; j < n; ++j) {
        ep[j] = pos(g.C.at(j, k));
        em[j] = pos(-g.C.at(j, k));
        if (g.Bt.at(j, k) > 0) tp = tp * g.F[j].pow(pos(g.Bt.at(j, k)));
        if (g.Bt.at(j, k) < 0) tm = tm * g.F[j].pow(pos(-g.Bt.at(j, k)));
    }
    LaurentPoly M = LaurentPoly::monomial(ep) * tp + LaurentPoly::monomial(em) * tm;
    r.F[k] = M.divide_exact(g.F[k]);

    // G-rule touches only column k and refers to the initial exchange matrix.
    for (int i = 0; i < n; ++i) {
        Int v = -g.G.at(i, k);
        for (int l = 0; l < n; ++l) {
            v += g.G.at(i, l) * pos(-g.Bt.at(l, k));
            v -= g.B0.at(i, l) * pos(-g.C.at(l, k));
        }
        r.G.at(i, k) = v;
    }

    // C-rule mirrors the B-rule columnwise.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == k)
                r.C.at(i, j) = -g.C.at(i, j);
            else
                r.C.at(i, j) = g.C.at(i, j) + g.C.at(i, k) * pos(g.Bt.at(k, j)) +
                               pos(-g.C.at(i, k)) * g.Bt.at(k, j);
        }

    r.Bt = b_mutate(g.Bt, k);
    return r;
}

FGCSeed permute_fgc(const FGCSeed& g, const Permutation& sigma) {
    FGCSeed r = g;
    for (int i = 0; i < g.n(); ++i) r.F[i] = g.F[sigma.inv_of(i)];
    r.G = permute_cols(g.G, sigma);
    r.C = permute_cols(g.C, sigma);
    r.Bt = permute_rows_cols(g.Bt, sigma);
    // B0 stays unpermuted: it is a pattern-level constant.
    return r;
}

bool fgc_equal(const FGCSeed& a, const FGCSeed& b) {
    return a.F == b.F && a.G == b.G && a.C == b.C && a.Bt == b.Bt && a.B0 == b.B0;
}

std::vector<RationalFn> separation_x(const FGCSeed& g, const Seed& seed0) {
    const int n = g.n(), nv = seed0.ambient_vars();
    std::vector<RationalFn> yhat = compute_yhat(seed0);
    std::vector<RationalFn> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        ExpVec e(nv, 0);
        for (int j = 0; j < n; ++j) e[j] = static_cast<int64_t>(g.G.at(j, i));
        RationalFn v(LaurentPoly::monomial(std::move(e)));
        v = v * substitute(g.F[i], yhat);
        v = v / sf_to_field(sf_eval_poly(g.F[i], seed0.y), n);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SfElem> separation_y(const FGCSeed& g, const Seed& seed0) {
    const int n = g.n();
    std::vector<SfElem> fp;
    fp.reserve(n);
    for (int j = 0; j < n; ++j) fp.push_back(sf_eval_poly(g.F[j], seed0.y));
    std::vector<SfElem> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        SfElem v = SfElem::unit(seed0.kind, seed0.m);
        for (int j = 0; j < n; ++j) {
            v = sf_mul(v, sf_pow(seed0.y[j], static_cast<int64_t>(g.C.at(j, i))));
            v = sf_mul(v, sf_pow(fp[j], static_cast<int64_t>(g.Bt.at(j, i))));
        }
        out.push_back(std::move(v));
    }
    return out;
}

Report check_invariants(const FGCSeed& g, const IntMatrix& D, const std::string& node) {
    const int n = g.n();
    Report rep;

    bool sc = true;
    std::string scw;
    for (int j = 0; j < n && sc; ++j) {
        bool hasp = false, hasn = false;
        for (int i = 0; i < n; ++i) {
            if (g.C.at(i, j) > 0) hasp = true;
            if (g.C.at(i, j) < 0) hasn = true;
        }
        if (hasp && hasn) {
            sc = false;
            scw = "column " + std::to_string(j + 1) + " of C = " + g.C.to_string();
        }
    }
    add(rep, "c-sign-coherence", node, sc, scw);

    bool ct = true, posv = true, poly = true;
    std::string ctw, posw, polyw;
    for (int i = 0; i < n; ++i) {
        if (g.F[i].constant_term() != 1 && ct) {
            ct = false;
            ctw = "F_" + std::to_string(i + 1) + " = " + g.F[i].to_string();
        }
        if (g.F[i].has_negative_coeff() && posv) {
            posv = false;
            posw = "F_" + std::to_string(i + 1) + " = " + g.F[i].to_string();
        }
        if (g.F[i].has_negative_exponent() && poly) {
            poly = false;
            polyw = "F_" + std::to_string(i + 1) + " = " + g.F[i].to_string();
        }
    }
    add(rep, "f-constant-term-1", node, ct, ctw);
    add(rep, "f-positivity", node, posv, posw);
    add(rep, "f-polynomiality", node, poly, polyw);

    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D.at(i, i);
    bool dual = g.G.transpose() * diag_mul(d, g.C) == D;
    add(rep, "gt-d-c-duality", node, dual,
        dual ? "" : "G = " + g.G.to_string() + ", C = " + g.C.to_string());

    bool bt = diag_mul(d, g.Bt) == g.C.transpose() * diag_mul(d, g.B0) * g.C;
    add(rep, "b-transport", node, bt,
        bt ? "" : "Bt = " + g.Bt.to_string() + ", C = " + g.C.to_string());

    Int dg = g.G.det(), dc = g.C.det();
    bool uni = (dg == 1 || dg == -1) && (dc == 1 || dc == -1);
    add(rep, "unimodularity", node, uni,
        uni ? "" : "det G = " + dg.str() + ", det C = " + dc.str());

    return rep;
}

IntMatrix f_matrix(const FGCSeed& g) {
    const int n = g.n();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = g.F[j].max_degree(i);
    return m;
}

Report check_detrop(const FGCSeed& g, const std::string& node) {
    Report rep;
    auto sigma = extract_sigma(g.G, IntMatrix::identity(g.n()));
    if (!sigma) return rep;
    for (int i = 0; i < g.n(); ++i)
        if (!g.F[i].is_one()) {
            add(rep, "detropicalization", node, false,
                "G = " + g.G.to_string() + " but F_" + std::to_string(i + 1) + " = " +
                    g.F[i].to_string());
            return rep;
        }
    add(rep, "detropicalization", node, true);
    return rep;
}

Report check_detrop_pair(const FGCSeed& a, const FGCSeed& b, const Permutation& sigma,
                         const std::string& node) {
    Report rep;
    bool gm = a.G == permute_cols(b.G, sigma);
    add(rep, "detrop-pair-g", node, gm,
        gm ? "" : "G1 = " + a.G.to_string() + ", G2 = " + b.G.to_string());
    if (!gm) return rep;
    bool fm = true;
    std::string fw;
    for (int i = 0; i < a.n() && fm; ++i)
        if (!(a.F[i] == b.F[sigma.inv_of(i)])) {
            fm = false;
            fw = "F1_" + std::to_string(i + 1) + " = " + a.F[i].to_string() +
                 ", F2_" + std::to_string(sigma.inv_of(i) + 1) + " = " +
                 b.F[sigma.inv_of(i)].to_string();
        }
    add(rep, "detrop-pair-f", node, fm, fw);
    bool bm = a.Bt == permute_rows_cols(b.Bt, sigma);
    add(rep, "detrop-pair-b", node, bm,
        bm ? "" : "B1 = " + a.Bt.to_string() + ", B2 = " + b.Bt.to_string());
    return rep;
}

Report check_cross_duality(const IntMatrix& B, const std::vector<int>& word,
                           CrossDuality which) {
    Report rep;
    const int n = B.n();
    FGCSeed base = initial_fgc(B);
    FGCSeed other = initial_fgc(which == CrossDuality::Transposition ? B.transpose()
                                : which == CrossDuality::Chiral      ? -B
                                                                     : -B.transpose());
    for (size_t p = 0;; ++p) {
        const std::string node = word_label(word, p);
        switch (which) {
        case CrossDuality::Transposition: {
            // C at the path start, for the pattern of B rooted at the current
            // node, against G of the B^T pattern rooted at the start.
            FGCSeed back = initial_fgc(base.Bt);
            for (size_t q = p; q-- > 0;) back = mutate_fgc(back, word[q]);
            bool ok = back.C.transpose() == other.G;
            add(rep, "transposition-duality", node, ok,
                ok ? "" : "C^T = " + back.C.transpose().to_string() +
                              ", G' = " + other.G.to_string());
            break;
        }
        case CrossDuality::Chiral: {
            bool ok = other.C == base.C + f_matrix(base) * base.Bt;
            add(rep, "chiral-duality-c", node, ok,
                ok ? "" : "C' = " + other.C.to_string() + ", C = " + base.C.to_string() +
                              ", FM = " + f_matrix(base).to_string());
            bool fok = other.F == base.F;
            add(rep, "chiral-duality-f", node, fok,
                fok ? "" : "F mismatch at node " + node);
            break;
        }
        case CrossDuality::Langlands: {
            bool ok = base.G.transpose() * other.C == IntMatrix::identity(n);
            add(rep, "langlands-duality", node, ok,
                ok ? "" : "G = " + base.G.to_string() + ", C' = " + other.C.to_string());
            break;
        }
        }
        if (p == word.size()) break;
        base = mutate_fgc(base, word[p]);
        other = mutate_fgc(other, word[p]);
    }
    return rep;
}

Report check_conjugate(const IntMatrix& RB, const IntMatrix& BR, const std::vector<int>& R,
                       const std::vector<int>& word) {
    Report rep;
    std::vector<Int> d(R.begin(), R.end());
    FGCSeed left = initial_fgc(RB), right = initial_fgc(BR);
    for (size_t p = 0;; ++p) {
        const std::string node = word_label(word, p);
        bool gok = diag_mul(d, right.G) == mul_diag(left.G, d);
        add(rep, "conjugate-g", node, gok,
            gok ? "" : "G = " + left.G.to_string() + ", G' = " + right.G.to_string());
        bool cok = diag_mul(d, right.C) == mul_diag(left.C, d);
        add(rep, "conjugate-c", node, cok,
            cok ? "" : "C = " + left.C.to_string() + ", C' = " + right.C.to_string());
        if (p == word.size()) break;
        left = mutate_fgc(left, word[p]);
        right = mutate_fgc(right, word[p]);
    }
    return rep;
}

} // namespace cluspat
