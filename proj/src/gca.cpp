#include "cluspat/gca.hpp"

#include <sstream>
#include <stdexcept>

namespace cluspat {

namespace {

int64_t pos(const Int& v) { return v > 0 ? static_cast<int64_t>(v) : 0; }

void add(Report& rep, const std::string& identity, const std::string& node, bool ok,
         const std::string& witness = "", Status bad = Status::Fail) {
    rep.push_back({identity, node, ok ? Status::Pass : bad, ok ? "" : witness});
}

Int binom(int n, int k) {
    Int v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

void check_r(const DegreeR& r, int n) {
    if (static_cast<int>(r.size()) != n)
        throw std::invalid_argument("degree R: size mismatch");
    for (int v : r)
        if (v < 1) throw std::invalid_argument("degree R: entries must be positive");
}

} // namespace

int gca_vars(int n, const DegreeR& r) {
    int m = n;
    for (int i = 0; i < n; ++i) m += r[i] - 1;
    return m;
}

int v_index(int n, const DegreeR& r, int i, int s) {
    int idx = n;
    for (int j = 0; j < i; ++j) idx += r[j] - 1;
    return idx + s - 1;
}

IntMatrix gb_mutate(const IntMatrix& B, const DegreeR& r, int k) {
    const int n = B.n();
    if (k < 0 || k >= n) throw std::out_of_range("gb_mutate: direction out of range");
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.at(i, j) = -B.at(i, j);
            else
                out.at(i, j) = B.at(i, j) + r[k] * (B.at(i, k) * pos(B.at(k, j)) +
                                                    pos(-B.at(i, k)) * B.at(k, j));
        }
    return out;
}

GCASeed initial_gca_seed(const IntMatrix& B, const DegreeR& r, CoeffPattern cp) {
    const int n = B.n();
    check_r(r, n);
    GCASeed s;
    s.n = n;
    s.r = r;
    s.B = B;
    switch (cp) {
    case CoeffPattern::Trivial:
        s.kind = SfKind::Trivial;
        s.m = 0;
        break;
    case CoeffPattern::YPrincipal:
        s.kind = SfKind::Tropical;
        s.m = n;
        break;
    case CoeffPattern::Principal:
        s.kind = SfKind::Tropical;
        s.m = gca_vars(n, r);
        break;
    case CoeffPattern::Universal:
        s.kind = SfKind::Universal;
        s.m = gca_vars(n, r);
        break;
    }
    const bool z_gens = cp == CoeffPattern::Principal || cp == CoeffPattern::Universal;
    for (int i = 0; i < n; ++i) {
        s.x.push_back(RationalFn::variable(n + s.m, i));
        s.y.push_back(s.m == 0 ? SfElem::unit(s.kind, 0) : SfElem::generator(s.kind, s.m, i));
        std::vector<SfElem> zi;
        for (int q = 1; q < r[i]; ++q)
            zi.push_back(z_gens ? SfElem::generator(s.kind, s.m, v_index(n, r, i, q))
                                : SfElem::unit(s.kind, s.m));
        s.z.push_back(std::move(zi));
    }
    return s;
}

GCAFGCSeed initial_gca_fgc(const IntMatrix& B, const DegreeR& r) {
    const int n = B.n();
    check_r(r, n);
    GCAFGCSeed g;
    g.r = r;
    g.F.assign(n, LaurentPoly::one(gca_vars(n, r)));
    g.G = g.C = IntMatrix::identity(n);
    g.Bt = g.B0 = B;
    g.vflip.assign(n, false);
    return g;
}

namespace {

/// z_{i,s} including the implicit boundary values z_{i,0} = z_{i,r_i} = 1.
SfElem z_at(const GCASeed& sd, int i, int s) {
    if (s == 0 || s == sd.r[i]) return SfElem::unit(sd.kind, sd.m);
    return sd.z[i][s - 1];
}

/// Z_k|_P(y_k) = oplus_{s=0}^{r_k} z_{k,s} y_k^s.
SfElem exchange_poly_value(const GCASeed& sd, int k) {
    SfElem acc = z_at(sd, k, 0);
    for (int s = 1; s <= sd.r[k]; ++s)
        acc = sf_oplus(acc, sf_mul(z_at(sd, k, s), sf_pow(sd.y[k], s)));
    return acc;
}

std::vector<RationalFn> gca_yhat(const GCASeed& sd) {
    std::vector<RationalFn> yhat;
    for (int i = 0; i < sd.n; ++i) {
        // yhat_i = y_i prod_j x_j^{b_ji} with the seed's own cluster variables.
        RationalFn v = sf_to_field(sd.y[i], sd.n);
        for (int j = 0; j < sd.n; ++j) {
            int64_t b = static_cast<int64_t>(sd.B.at(j, i));
            if (b != 0) v = v * sd.x[j].pow(b);
        }
        yhat.push_back(std::move(v));
    }
    return yhat;
}

} // namespace

GCASeed mutate_gca_seed(const GCASeed& s, int k) {
    const int n = s.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutate_gca_seed: direction out of range");
    GCASeed out = s;
    out.B = gb_mutate(s.B, s.r, k);

    SfElem zk_val = exchange_poly_value(s, k);
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            out.y[i] = sf_inv(s.y[k]);
        } else {
            SfElem v = sf_mul(s.y[i], sf_pow(sf_pow(s.y[k], pos(s.B.at(k, i))), s.r[k]));
            out.y[i] = sf_mul(v, sf_pow(zk_val, -static_cast<int64_t>(s.B.at(k, i))));
        }
    }
    for (int q = 1; q < s.r[k]; ++q) out.z[k][q - 1] = s.z[k][s.r[k] - q - 1];

    // x'_k = x_k^{-1} (prod_j x_j^{[-b_jk]+})^{r_k} Z_k(yhat_k) / Z_k|_P(y_k)
    RationalFn mono = RationalFn::one(s.ambient_vars());
    for (int j = 0; j < n; ++j) {
        int64_t p = static_cast<int64_t>(s.r[k]) * static_cast<int64_t>(pos(-s.B.at(j, k)));
        if (p != 0) mono = mono * s.x[j].pow(p);
    }
    RationalFn yhat_k = gca_yhat(s)[k];
    RationalFn znum(LaurentPoly::constant(s.ambient_vars(), 0));
    for (int q = 0; q <= s.r[k]; ++q)
        znum = znum + sf_to_field(z_at(s, k, q), n) * yhat_k.pow(q);
    out.x[k] = s.x[k].inverse() * mono * znum / sf_to_field(zk_val, n);
    return out;
}

GCAFGCSeed mutate_gca_fgc(const GCAFGCSeed& g, int k) {
    const int n = g.n();
    if (k < 0 || k >= n) throw std::out_of_range("mutate_gca_fgc: direction out of range");
    const int nv = gca_vars(n, g.r);
    GCAFGCSeed out = g;

    // M = sum_{s=0}^{r_k} v_{k,s;t} * neg^{r_k - s} * pos^{s}, where
    // neg = prod_j u_j^{[-c_jk]+} F_j^{[-b_jk]+} and pos the positive twin.
    ExpVec ep(nv, 0), em(nv, 0);
    LaurentPoly tp = LaurentPoly::one(nv), tm = LaurentPoly::one(nv);
    for (int j = 0; j < n; ++j) {
        ep[j] = pos(g.C.at(j, k));
        em[j] = pos(-g.C.at(j, k));
        if (g.Bt.at(j, k) > 0) tp = tp * g.F[j].pow(pos(g.Bt.at(j, k)));
        if (g.Bt.at(j, k) < 0) tm = tm * g.F[j].pow(pos(-g.Bt.at(j, k)));
    }
    LaurentPoly pp = LaurentPoly::monomial(ep) * tp;
    LaurentPoly pm = LaurentPoly::monomial(em) * tm;
    LaurentPoly M(nv);
    for (int s = 0; s <= g.r[k]; ++s) {
        LaurentPoly term = pm.pow(g.r[k] - s) * pp.pow(s);
        if (s > 0 && s < g.r[k]) {
            int stored = g.vflip[k] ? g.r[k] - s : s;
            term = term * LaurentPoly::variable(nv, v_index(n, g.r, k, stored));
        }
        M += term;
    }
    out.F[k] = M.divide_exact(g.F[k]);

    for (int i = 0; i < n; ++i) {
        Int v = -g.G.at(i, k);
        Int acc = 0;
        for (int l = 0; l < n; ++l) {
            acc += g.G.at(i, l) * pos(-g.Bt.at(l, k));
            acc -= g.B0.at(i, l) * pos(-g.C.at(l, k));
        }
        out.G.at(i, k) = v + g.r[k] * acc;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == k)
                out.C.at(i, j) = -g.C.at(i, j);
            else
                out.C.at(i, j) = g.C.at(i, j) + g.r[k] * (g.C.at(i, k) * pos(g.Bt.at(k, j)) +
                                                          pos(-g.C.at(i, k)) * g.Bt.at(k, j));
        }

    out.Bt = gb_mutate(g.Bt, g.r, k);
    // The v-reversal s -> r_k - s is the identity permutation when r_k <= 2
    // (one or zero interior indices), so only r_k >= 3 carries flip state.
    if (g.r[k] >= 3) out.vflip[k] = !g.vflip[k];
    return out;
}

GCASeed permute_gca_seed(const GCASeed& s, const Permutation& sigma) {
    GCASeed out = s;
    for (int i = 0; i < s.n; ++i) {
        const int src = sigma.inv_of(i);
        if (s.r[src] != s.r[i])
            throw std::invalid_argument("permute_gca_seed: permutation not compatible with R");
        out.x[i] = s.x[src];
        out.y[i] = s.y[src];
        out.z[i] = s.z[src];
    }
    out.B = permute_rows_cols(s.B, sigma);
    return out;
}

bool gca_seeds_equal(const GCASeed& a, const GCASeed& b) {
    if (a.n != b.n || a.kind != b.kind || a.m != b.m || a.r != b.r || !(a.B == b.B))
        return false;
    for (int i = 0; i < a.n; ++i) {
        if (!a.y[i].equals(b.y[i]) || !a.x[i].equals(b.x[i])) return false;
        for (size_t q = 0; q < a.z[i].size(); ++q)
            if (!a.z[i][q].equals(b.z[i][q])) return false;
    }
    return true;
}

bool gca_fgc_equal(const GCAFGCSeed& a, const GCAFGCSeed& b) {
    return a.r == b.r && a.F == b.F && a.G == b.G && a.C == b.C && a.Bt == b.Bt &&
           a.B0 == b.B0 && a.vflip == b.vflip;
}

std::vector<RationalFn> gca_separation_x(const GCAFGCSeed& g, const GCASeed& seed0) {
    const int n = g.n(), nv = seed0.ambient_vars();
    std::vector<RationalFn> images = gca_yhat(seed0);
    std::vector<SfElem> args = seed0.y;
    for (int i = 0; i < n; ++i)
        for (int q = 1; q < g.r[i]; ++q) {
            images.push_back(sf_to_field(seed0.z[i][q - 1], n));
            args.push_back(seed0.z[i][q - 1]);
        }
    std::vector<RationalFn> out;
    for (int i = 0; i < n; ++i) {
        ExpVec e(nv, 0);
        for (int j = 0; j < n; ++j) e[j] = static_cast<int64_t>(g.G.at(j, i));
        RationalFn v(LaurentPoly::monomial(std::move(e)));
        v = v * substitute(g.F[i], images);
        v = v / sf_to_field(sf_eval_poly(g.F[i], args), n);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SfElem> gca_separation_y(const GCAFGCSeed& g, const GCASeed& seed0) {
    const int n = g.n();
    std::vector<SfElem> args = seed0.y;
    for (int i = 0; i < n; ++i)
        for (int q = 1; q < g.r[i]; ++q) args.push_back(seed0.z[i][q - 1]);
    std::vector<SfElem> fp;
    for (int j = 0; j < n; ++j) fp.push_back(sf_eval_poly(g.F[j], args));
    std::vector<SfElem> out;
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

namespace {

/// Specialize every v-variable to a constant; the result lives in u only.
LaurentPoly subst_v(const LaurentPoly& f, int n, const std::vector<Int>& vvals) {
    LaurentPoly out(n);
    ExpVec e(n);
    for (const auto& [exps, c] : f.terms()) {
        Int coeff = c;
        for (size_t j = n; j < exps.size(); ++j)
            for (int64_t q = 0; q < exps[j]; ++q) coeff *= vvals[j - n];
        bool drop = false;
        if (!vvals.empty()) {
            for (size_t j = n; j < exps.size() && !drop; ++j)
                if (exps[j] > 0 && vvals[j - n] == 0) drop = true;
        }
        if (drop || coeff == 0) continue;
        for (int j = 0; j < n; ++j) e[j] = exps[j];
        out.add_term(e, coeff);
    }
    return out;
}

} // namespace

Report companion_check(const GCAFGCSeed& g, const FGCSeed& left, const FGCSeed& right,
                       const std::string& node) {
    Report rep;
    const int n = g.n();
    std::vector<Int> rd(g.r.begin(), g.r.end());

    // gc1 in integer-safe form: G = R^{-1} lG R  <=>  R G = lG R.
    bool gc1 = diag_mul(rd, g.G) == mul_diag(left.G, rd) && g.C == left.C;
    add(rep, "companion-left-gc", node, gc1,
        gc1 ? "" : "G = " + g.G.to_string() + ", lG = " + left.G.to_string() +
                       ", C = " + g.C.to_string() + ", lC = " + left.C.to_string());

    bool gg1 = g.G == right.G && mul_diag(g.C, rd) == diag_mul(rd, right.C);
    add(rep, "companion-right-gc", node, gg1,
        gg1 ? "" : "G = " + g.G.to_string() + ", rG = " + right.G.to_string() +
                       ", C = " + g.C.to_string() + ", rC = " + right.C.to_string());

    // gff2: F(u, v_{i,s} -> binom(r_i, s)) = lF_i^{r_i}
    bool ff2 = true;
    std::string ff2w;
    std::vector<Int> vbin;
    for (int i = 0; i < n; ++i)
        for (int s = 1; s < g.r[i]; ++s) vbin.push_back(binom(g.r[i], s));
    for (int i = 0; i < n && ff2; ++i)
        if (!(subst_v(g.F[i], n, vbin) == left.F[i].pow(g.r[i]))) {
            ff2 = false;
            ff2w = "i = " + std::to_string(i + 1) + ", F = " + g.F[i].to_string() +
                   ", lF = " + left.F[i].to_string();
        }
    add(rep, "companion-left-f", node, ff2, ff2w);

    // gff1: F(u, 0) = rF(u_1^{r_1}, ..., u_n^{r_n})
    bool ff1 = true;
    std::string ff1w;
    std::vector<Int> vzero(vbin.size(), 0);
    std::vector<ExpVec> stretch(n, ExpVec(n, 0));
    for (int i = 0; i < n; ++i) stretch[i][i] = g.r[i];
    for (int i = 0; i < n && ff1; ++i)
        if (!(subst_v(g.F[i], n, vzero) == right.F[i].substitute_monomials(n, stretch))) {
            ff1 = false;
            ff1w = "i = " + std::to_string(i + 1) + ", F = " + g.F[i].to_string() +
                   ", rF = " + right.F[i].to_string();
        }
    add(rep, "companion-right-f", node, ff1, ff1w);
    return rep;
}

bool check_strong_compat(const Permutation& sigma, const DegreeR& r) {
    for (int i = 0; i < sigma.n(); ++i)
        if (r[i] >= 2 && sigma.of(i) != i) return false;
    return true;
}

Report check_gca_invariants(const GCAFGCSeed& g, const IntMatrix& D, const std::string& node) {
    Report rep;
    const int n = g.n();

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
    add(rep, "gca-c-sign-coherence", node, sc, scw);

    bool ct = true, u0 = true, posv = true, maxmono = true;
    std::string ctw, u0w, posw, maxw;
    for (int i = 0; i < n; ++i) {
        const auto fi = "F_" + std::to_string(i + 1) + " = " + g.F[i].to_string();
        if (g.F[i].constant_term() != 1 && ct) { ct = false; ctw = fi; }
        if (g.F[i].has_negative_coeff() && posv) { posv = false; posw = fi; }
        // F(0, v) = 1: the only term with zero u-part is the constant 1.
        for (const auto& [e, c] : g.F[i].terms()) {
            bool uzero = true;
            for (int j = 0; j < n; ++j)
                if (e[j] != 0) uzero = false;
            bool vzero = true;
            for (size_t j = n; j < e.size(); ++j)
                if (e[j] != 0) vzero = false;
            if (uzero && !(vzero && c == 1) && u0) { u0 = false; u0w = fi; }
        }
        // Unique monomial of maximal total u-degree, with coefficient 1.
        int64_t best = -1, count = 0;
        Int bestc;
        for (const auto& [e, c] : g.F[i].terms()) {
            int64_t deg = 0;
            for (int j = 0; j < n; ++j) deg += e[j];
            if (deg > best) { best = deg; count = 1; bestc = c; }
            else if (deg == best) ++count;
        }
        if ((count != 1 || bestc != 1) && maxmono) { maxmono = false; maxw = fi; }
    }
    add(rep, "gca-f-constant-term-1", node, ct, ctw);
    add(rep, "gca-f-at-u0", node, u0, u0w);
    add(rep, "gca-f-positivity", node, posv, posw, Status::Conjecture);
    add(rep, "gca-f-max-monomial", node, maxmono, maxw);

    std::vector<Int> rd(n);
    for (int i = 0; i < n; ++i) rd[i] = Int(g.r[i]) * D.at(i, i);
    bool dual = g.G.transpose() * diag_mul(rd, g.C) == diag_mul(rd, IntMatrix::identity(n));
    add(rep, "gca-duality", node, dual,
        dual ? "" : "G = " + g.G.to_string() + ", C = " + g.C.to_string());

    bool bt = diag_mul(rd, g.Bt) == g.C.transpose() * diag_mul(rd, g.B0) * g.C;
    add(rep, "gca-b-transport", node, bt,
        bt ? "" : "Bt = " + g.Bt.to_string() + ", C = " + g.C.to_string());

    Int dg = g.G.det(), dc = g.C.det();
    bool uni = (dg == 1 || dg == -1) && (dc == 1 || dc == -1);
    add(rep, "gca-unimodularity", node, uni,
        uni ? "" : "det G = " + dg.str() + ", det C = " + dc.str());
    return rep;
}

Report check_gca_detrop(const GCAFGCSeed& g, const std::string& node) {
    Report rep;
    auto sigma = extract_sigma(g.G, IntMatrix::identity(g.n()));
    if (!sigma) return rep;
    for (int i = 0; i < g.n(); ++i)
        if (!g.F[i].is_one()) {
            add(rep, "gca-detropicalization", node, false,
                "G = " + g.G.to_string() + " but F_" + std::to_string(i + 1) + " = " +
                    g.F[i].to_string());
            return rep;
        }
    add(rep, "gca-detropicalization", node, true);
    return rep;
}

Report check_gca_detrop_pair(const GCAFGCSeed& a, const GCAFGCSeed& b,
                             const Permutation& sigma, const std::string& node) {
    Report rep;
    bool gm = a.G == permute_cols(b.G, sigma);
    add(rep, "gca-detrop-pair-g", node, gm,
        gm ? "" : "G1 = " + a.G.to_string() + ", G2 = " + b.G.to_string());
    if (!gm) return rep;

    bool strong = check_strong_compat(sigma, a.r);
    add(rep, "gca-strong-compatibility", node, strong,
        strong ? "" : "sigma = " + sigma.to_string());

    bool fm = true;
    std::string fw;
    for (int i = 0; i < a.n() && fm; ++i)
        if (!(a.F[i] == b.F[sigma.inv_of(i)])) {
            fm = false;
            fw = "F1_" + std::to_string(i + 1) + " = " + a.F[i].to_string() + ", F2_" +
                 std::to_string(sigma.inv_of(i) + 1) + " = " + b.F[sigma.inv_of(i)].to_string();
        }
    add(rep, "gca-detrop-pair-f", node, fm, fw);

    bool vm = a.vflip == b.vflip;
    add(rep, "gca-v-state-match", node, vm, vm ? "" : "v-states differ");

    bool bm = a.Bt == permute_rows_cols(b.Bt, sigma);
    add(rep, "gca-detrop-pair-b", node, bm,
        bm ? "" : "B1 = " + a.Bt.to_string() + ", B2 = " + b.Bt.to_string());
    return rep;
}

} // namespace cluspat
