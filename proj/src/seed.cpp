#include "cluspat/seed.hpp"

#include <numeric>
#include <stdexcept>

namespace cluspat {

namespace {

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

int64_t pos(const Int& v) { return v > 0 ? static_cast<int64_t>(v) : 0; }

} // namespace

std::string to_string(CoeffPattern p) {
    switch (p) {
    case CoeffPattern::Trivial: return "trivial";
    case CoeffPattern::Principal: return "principal";
    case CoeffPattern::YPrincipal: return "y-principal";
    case CoeffPattern::Universal: return "universal";
    }
    throw std::logic_error("bad CoeffPattern");
}

IntMatrix b_mutate(const IntMatrix& B, int k) {
    const int n = B.n();
    if (k < 0 || k >= n) throw std::out_of_range("b_mutate: direction out of range");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                r.at(i, j) = -B.at(i, j);
            else
                r.at(i, j) = B.at(i, j) + B.at(i, k) * pos(B.at(k, j)) +
                             pos(-B.at(i, k)) * B.at(k, j);
        }
    return r;
}

IntMatrix skew_symmetrizer(const IntMatrix& B) {
    const int n = B.n();
    for (int i = 0; i < n; ++i) {
        if (B.at(i, i) != 0)
            throw std::invalid_argument("skew_symmetrizer: nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            const Int &a = B.at(i, j), &b = B.at(j, i);
            if ((a == 0) != (b == 0) || a * b > 0)
                throw std::invalid_argument("skew_symmetrizer: sign-pattern violation");
        }
    }
    // Propagate the ratios d_j/d_root as reduced fractions over each connected
    // component of the nonzero pattern; inconsistent cycles are errors.
    std::vector<std::pair<Int, Int>> ratio(n); // (num, den), den > 0
    std::vector<int> comp(n, -1);
    IntMatrix D = IntMatrix::identity(n);
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        std::vector<int> stack{root}, members{root};
        comp[root] = root;
        ratio[root] = {1, 1};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (B.at(i, j) == 0) continue;
                // d_i b_ij = -d_j b_ji  =>  d_j = d_i * b_ij / (-b_ji)
                Int num = ratio[i].first * B.at(i, j);
                Int den = ratio[i].second * (-B.at(j, i));
                if (den < 0) { num = -num; den = -den; }
                Int g = int_gcd(num, den);
                num /= g;
                den /= g;
                if (comp[j] < 0) {
                    comp[j] = root;
                    ratio[j] = {num, den};
                    stack.push_back(j);
                    members.push_back(j);
                } else if (ratio[j].first != num || ratio[j].second != den) {
                    throw std::invalid_argument("skew_symmetrizer: inconsistent cycle");
                }
            }
        }
        Int scale = 1;
        for (int i : members) scale = scale / int_gcd(scale, ratio[i].second) * ratio[i].second;
        Int g = 0;
        for (int i : members) g = int_gcd(g, ratio[i].first * (scale / ratio[i].second));
        for (int i : members) D.at(i, i) = ratio[i].first * (scale / ratio[i].second) / g;
    }
    return D;
}

RationalFn sf_to_field(const SfElem& p, int n) {
    const int nv = n + p.gens();
    switch (p.kind()) {
    case SfKind::Trivial:
        return RationalFn::one(nv);
    case SfKind::Tropical: {
        ExpVec e(nv, 0);
        for (int i = 0; i < p.gens(); ++i) e[n + i] = p.exponents()[i];
        return RationalFn(LaurentPoly::monomial(std::move(e)));
    }
    case SfKind::Universal:
        return p.value().shifted(nv, n);
    }
    throw std::logic_error("bad SfKind");
}

namespace {

int sf_gens(CoeffPattern cp, int n) {
    return cp == CoeffPattern::Trivial ? 0 : n;
}

SfKind sf_kind(CoeffPattern cp) {
    switch (cp) {
    case CoeffPattern::Trivial: return SfKind::Trivial;
    case CoeffPattern::Principal:
    case CoeffPattern::YPrincipal: return SfKind::Tropical;
    case CoeffPattern::Universal: return SfKind::Universal;
    }
    throw std::logic_error("bad CoeffPattern");
}

} // namespace

Seed initial_seed(const IntMatrix& B, CoeffPattern cp) {
    Seed s;
    s.n = B.n();
    s.kind = sf_kind(cp);
    s.m = sf_gens(cp, s.n);
    s.B = B;
    s.D = skew_symmetrizer(B);
    for (int i = 0; i < s.n; ++i) {
        s.x.push_back(RationalFn::variable(s.n + s.m, i));
        s.y.push_back(s.m == 0 ? SfElem::unit(s.kind, 0)
                               : SfElem::generator(s.kind, s.m, i));
    }
    return s;
}

YSeed initial_yseed(const IntMatrix& B, CoeffPattern cp) {
    Seed s = initial_seed(B, cp);
    return YSeed{s.n, s.kind, s.m, std::move(s.y), std::move(s.B), std::move(s.D)};
}

std::vector<RationalFn> compute_yhat(const Seed& s) {
    std::vector<RationalFn> yhat;
    yhat.reserve(s.n);
    for (int i = 0; i < s.n; ++i) {
        // yhat_i = y_i prod_j x_j^{b_ji}, where the x_j are the seed's own
        // cluster variables (rational functions of the initial ones).
        RationalFn v = sf_to_field(s.y[i], s.n);
        for (int j = 0; j < s.n; ++j) {
            int64_t b = static_cast<int64_t>(s.B.at(j, i));
            if (b != 0) v = v * s.x[j].pow(b);
        }
        yhat.push_back(std::move(v));
    }
    return yhat;
}

namespace {

std::vector<SfElem> y_mutate(const std::vector<SfElem>& y, const IntMatrix& B, int k) {
    const int n = B.n();
    std::vector<SfElem> yp;
    yp.reserve(n);
    SfElem opk = sf_oplus(SfElem::unit(y[k].kind(), y[k].gens()), y[k]); // 1 (+) y_k
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            yp.push_back(sf_inv(y[k]));
        } else {
            SfElem v = sf_mul(y[i], sf_pow(y[k], pos(B.at(k, i))));
            yp.push_back(sf_mul(v, sf_pow(opk, -static_cast<int64_t>(B.at(k, i)))));
        }
    }
    return yp;
}

} // namespace

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutate_seed: direction out of range");
    Seed r = s;
    r.B = b_mutate(s.B, k);
    r.y = y_mutate(s.y, s.B, k);

    // x'_k = x_k^{-1} (prod_j x_j^{[-b_jk]+}) (1 + yhat_k) / (1 (+) y_k)
    RationalFn mono = RationalFn::one(s.ambient_vars());
    for (int j = 0; j < n; ++j) {
        int64_t p = static_cast<int64_t>(pos(-s.B.at(j, k)));
        if (p != 0) mono = mono * s.x[j].pow(p);
    }
    RationalFn yhat_k = compute_yhat(s)[k];
    RationalFn numer = RationalFn::one(s.ambient_vars()) + yhat_k;
    RationalFn denom =
        sf_to_field(sf_oplus(SfElem::unit(s.kind, s.m), s.y[k]), n);
    r.x[k] = s.x[k].inverse() * mono * numer / denom;
    return r;
}

YSeed mutate_yseed(const YSeed& s, int k) {
    if (k < 0 || k >= s.n) throw std::out_of_range("mutate_yseed: direction out of range");
    YSeed r = s;
    r.B = b_mutate(s.B, k);
    r.y = y_mutate(s.y, s.B, k);
    return r;
}

Seed permute_seed(const Seed& s, const Permutation& sigma) {
    Seed r = s;
    for (int i = 0; i < s.n; ++i) {
        r.x[i] = s.x[sigma.inv_of(i)];
        r.y[i] = s.y[sigma.inv_of(i)];
    }
    r.B = permute_rows_cols(s.B, sigma);
    r.D = permute_rows_cols(s.D, sigma);
    return r;
}

YSeed permute_seed(const YSeed& s, const Permutation& sigma) {
    YSeed r = s;
    for (int i = 0; i < s.n; ++i) r.y[i] = s.y[sigma.inv_of(i)];
    r.B = permute_rows_cols(s.B, sigma);
    r.D = permute_rows_cols(s.D, sigma);
    return r;
}

bool seeds_equal(const Seed& a, const Seed& b) {
    if (a.n != b.n || a.kind != b.kind || a.m != b.m || !(a.B == b.B)) return false;
    for (int i = 0; i < a.n; ++i)
        if (!a.y[i].equals(b.y[i]) || !a.x[i].equals(b.x[i])) return false;
    return true;
}

bool seeds_equal(const YSeed& a, const YSeed& b) {
    if (a.n != b.n || a.kind != b.kind || a.m != b.m || !(a.B == b.B)) return false;
    for (int i = 0; i < a.n; ++i)
        if (!a.y[i].equals(b.y[i])) return false;
    return true;
}

} // namespace cluspat
