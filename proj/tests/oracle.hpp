#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written directly from the defining formulas in a
// deliberately different style (sign/abs form of the exchange-matrix rule,
// exchange-relation form of the x-rule, exponent-vector tropical y's) and
// shares no mutation code with src/.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cluspat/explore.hpp"

namespace oracle {

using cluspat::Int;
using cluspat::IntMatrix;
using cluspat::LaurentPoly;
using cluspat::Permutation;
using cluspat::RationalFn;

using Mat = std::vector<std::vector<long long>>;

inline Mat to_mat(const IntMatrix& m) {
    Mat out(m.n(), std::vector<long long>(m.n()));
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out[i][j] = m.at(i, j).convert_to<long long>();
    return out;
}

inline IntMatrix to_intmatrix(const Mat& m) {
    IntMatrix out(static_cast<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) out.at(i, j) = m[i][j];
    return out;
}

/// Exchange-matrix mutation via the sign/abs form
/// b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
inline Mat bmut(const Mat& b, int k) {
    const int n = static_cast<int>(b.size());
    Mat out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out[i][j] = -b[i][j];
            } else {
                long long cross = std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j]);
                out[i][j] = b[i][j] + cross / 2;
            }
        }
    return out;
}

/// Principal-coefficient seed: x lives in Q(x_1..x_n, y_1..y_n) (variables
/// 0..n-1 are x, n..2n-1 are y) and each y_i is the monomial with exponent
/// vector cvec[i] (a tropical element).
struct PSeed {
    int n = 0;
    std::vector<RationalFn> x;
    std::vector<std::vector<long long>> cvec; // cvec[i][l] = exponent of y_l in y_i
    Mat B, B0;
};

inline PSeed initial_pseed(const Mat& B) {
    PSeed s;
    s.n = static_cast<int>(B.size());
    s.B = s.B0 = B;
    for (int i = 0; i < s.n; ++i) {
        s.x.push_back(RationalFn::variable(2 * s.n, i));
        std::vector<long long> e(s.n, 0);
        e[i] = 1;
        s.cvec.push_back(e);
    }
    return s;
}

/// Seed mutation written from the exchange relation
/// x_k x'_k = (y_k prod x^{[b_jk]+} + prod x^{[-b_jk]+}) / (1 (+) y_k)
/// with tropical 1 (+) y_k = y^{min(c_k, 0)}.
inline PSeed pmut(const PSeed& s, int k) {
    const int n = s.n;
    PSeed out = s;

    std::vector<long long> mfloor(n);
    for (int l = 0; l < n; ++l) mfloor[l] = std::min(s.cvec[k][l], 0LL);

    // Numerator: y^{c_k} prod x^{[b_jk]+} + prod x^{[-b_jk]+}, all exponents
    // relative to the common denominator x_k y^{mfloor}.
    std::vector<int64_t> e1(2 * n, 0), e2(2 * n, 0), ed(2 * n, 0);
    for (int j = 0; j < n; ++j) {
        e1[j] = std::max(s.B[j][k], 0LL);
        e2[j] = std::max(-s.B[j][k], 0LL);
    }
    for (int l = 0; l < n; ++l) {
        e1[n + l] = s.cvec[k][l];
        ed[n + l] = mfloor[l];
    }
    ed[k] = 1;
    LaurentPoly num = LaurentPoly::monomial(e1, 1) + LaurentPoly::monomial(e2, 1);
    RationalFn ratio(num, LaurentPoly::monomial(ed, 1));
    // Substitute the current cluster into that Laurent expression.
    std::vector<RationalFn> images;
    for (int j = 0; j < n; ++j) images.push_back(s.x[j]);
    for (int l = 0; l < n; ++l) images.push_back(RationalFn::variable(2 * n, n + l));
    out.x[k] = cluspat::substitute(ratio.num(), images) / cluspat::substitute(ratio.den(), images);

    // Tropical y-rule on exponent vectors:
    // c'_k = -c_k; c'_i = c_i + [b_ki]+ c_k - b_ki min(c_k, 0).
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            if (i == k)
                out.cvec[i][l] = -s.cvec[k][l];
            else
                out.cvec[i][l] = s.cvec[i][l] + std::max(s.B[k][i], 0LL) * s.cvec[k][l] -
                                 s.B[k][i] * mfloor[l];
        }

    out.B = bmut(s.B, k);
    return out;
}

/// F-polynomial of variable i: x_i with every initial x_j set to 1,
/// as a rational function in the y-block (indices n..2n-1).
inline RationalFn f_of(const PSeed& s, int i) {
    std::vector<RationalFn> images;
    for (int j = 0; j < s.n; ++j) images.push_back(RationalFn::one(2 * s.n));
    for (int l = 0; l < s.n; ++l) images.push_back(RationalFn::variable(2 * s.n, s.n + l));
    return cluspat::substitute(s.x[i].num(), images) / cluspat::substitute(s.x[i].den(), images);
}

/// g-vector of variable i via the Z^n-grading deg x_j = e_j, deg y_l = -b0_l
/// (principal-coefficient x's are homogeneous); read off any one term of the
/// numerator and denominator.
inline std::vector<long long> g_of(const PSeed& s, int i) {
    auto deg_of_term = [&](const std::vector<int64_t>& e) {
        std::vector<long long> d(s.n, 0);
        for (int j = 0; j < s.n; ++j) d[j] += e[j];
        for (int l = 0; l < s.n; ++l)
            for (int j = 0; j < s.n; ++j) d[j] -= e[s.n + l] * s.B0[j][l];
        return d;
    };
    auto dn = deg_of_term(s.x[i].num().terms().begin()->first);
    auto dd = deg_of_term(s.x[i].den().terms().begin()->first);
    for (int j = 0; j < s.n; ++j) dn[j] -= dd[j];
    return dn;
}

/// Homogeneity check backing g_of: every numerator/denominator term has the
/// same degree.
inline bool homogeneous(const PSeed& s, int i) {
    auto deg_of_term = [&](const std::vector<int64_t>& e) {
        std::vector<long long> d(s.n, 0);
        for (int j = 0; j < s.n; ++j) d[j] += e[j];
        for (int l = 0; l < s.n; ++l)
            for (int j = 0; j < s.n; ++j) d[j] -= e[s.n + l] * s.B0[j][l];
        return d;
    };
    for (const LaurentPoly* p : {&s.x[i].num(), &s.x[i].den()}) {
        auto ref = deg_of_term(p->terms().begin()->first);
        for (const auto& [e, c] : p->terms())
            if (deg_of_term(e) != ref) return false;
    }
    return true;
}

/// Coefficient-free seed for brute-force exchange-graph counting.
struct TSeed {
    int n = 0;
    std::vector<RationalFn> x;
    Mat B;
};

inline TSeed initial_tseed(const Mat& B) {
    TSeed s;
    s.n = static_cast<int>(B.size());
    s.B = B;
    for (int i = 0; i < s.n; ++i) s.x.push_back(RationalFn::variable(s.n, i));
    return s;
}

inline TSeed tmut(const TSeed& s, int k) {
    const int n = s.n;
    TSeed out = s;
    std::vector<int64_t> e1(n, 0), e2(n, 0), ed(n, 0);
    for (int j = 0; j < n; ++j) {
        e1[j] = std::max(s.B[j][k], 0LL);
        e2[j] = std::max(-s.B[j][k], 0LL);
    }
    ed[k] = 1;
    LaurentPoly num = LaurentPoly::monomial(e1, 1) + LaurentPoly::monomial(e2, 1);
    std::vector<RationalFn> images = s.x;
    out.x[k] = cluspat::substitute(num, images) /
               cluspat::substitute(LaurentPoly::monomial(ed, 1), images);
    out.B = bmut(s.B, k);
    return out;
}

/// Canonical key of a TSeed under simultaneous index permutation: the
/// lexicographically smallest (x-strings, B) over all sigma.
inline std::string tseed_key(const TSeed& s) {
    const int n = s.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::ostringstream os;
        for (int i = 0; i < n; ++i) os << s.x[perm[i]].to_string() << ";";
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) os << s.B[perm[i]][perm[j]] << ",";
        std::string k = os.str();
        if (best.empty() || k < best) best = std::move(k);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Brute-force BFS over reduced mutation words, deduplicating unlabeled seeds
/// by canonical key. Returns the number of distinct unlabeled seeds, or -1
/// when the cap is exceeded before closure.
inline long long count_unlabeled_seeds(const Mat& B, size_t cap = 4000) {
    std::set<std::string> seen;
    TSeed root = initial_tseed(B);
    seen.insert(tseed_key(root));
    std::vector<std::pair<TSeed, int>> frontier{{root, -1}};
    while (!frontier.empty()) {
        std::vector<std::pair<TSeed, int>> next;
        for (const auto& [s, via] : frontier)
            for (int k = 0; k < s.n; ++k) {
                if (k == via) continue;
                TSeed t = tmut(s, k);
                if (seen.insert(tseed_key(t)).second) next.emplace_back(std::move(t), k);
                if (seen.size() > cap) return -1;
            }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

/// First length L > 0 at which the alternating word (1,2,1,2,...) returns the
/// initial seed up to some permutation; also reports that sigma. Returns
/// {-1, identity} when no period shows up within max_len steps.
inline std::pair<int, Permutation> alternating_period(const Mat& B, int max_len = 40) {
    TSeed root = initial_tseed(B);
    TSeed cur = root;
    const int n = root.n;
    for (int len = 1; len <= max_len; ++len) {
        cur = tmut(cur, (len - 1) % 2);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                if (!cur.x[perm[i]].equals(root.x[i])) ok = false;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (cur.B[perm[i]][perm[j]] != root.B[i][j]) ok = false;
            if (ok) {
                // perm sends root index i to cur slot perm[i]; sigma maps
                // cur to root, i.e. sigma(perm[i]) = i.
                std::vector<int> img(n);
                for (int i = 0; i < n; ++i) img[perm[i]] = i;
                return {len, Permutation(img)};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {-1, Permutation(root.n)};
}

/// Deterministic xorshift RNG for reproducible randomized suites.
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

/// Random skew-symmetrizable B: pick a random skew-symmetric core and a
/// random positive diagonal, then B = D^{-1} S with integer entries by
/// construction (S_ij divisible by d_i via S = D A - A^T D trick is overkill;
/// instead take B_ij = a_ij d_j, B_ji = -a_ij d_i for i < j).
inline Mat random_b(Rng& rng, int n, int max_entry = 2) {
    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i) d[i] = rng.range(1, 2);
    Mat B(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long a = rng.range(-max_entry, max_entry);
            B[i][j] = a * d[j];
            B[j][i] = -a * d[i];
        }
    return B;
}

} // namespace oracle
