#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"

using namespace cluspat;

namespace {

IntMatrix a2() { return oracle::to_intmatrix({{0, 1}, {-1, 0}}); }

/// Map an n-variable F-polynomial into the 2n-variable principal ambient
/// field with u_l placed at index n + l, for comparison with the oracle.
RationalFn embed_f(const LaurentPoly& f, int n) {
    std::vector<RationalFn> images;
    for (int l = 0; l < n; ++l) images.push_back(RationalFn::variable(2 * n, n + l));
    return substitute(f, images);
}

bool no_fail(const Report& r) { return report_ok(r); }

} // namespace

TEST_CASE("A2 mutation produces the expected FGC data") {
    FGCSeed g = mutate_fgc(initial_fgc(a2()), 0);
    LaurentPoly f1 = LaurentPoly::one(2) + LaurentPoly::variable(2, 0);
    CHECK(g.F[0] == f1);
    CHECK(g.F[1] == LaurentPoly::one(2));
    CHECK(g.G == oracle::to_intmatrix({{-1, 0}, {1, 1}}));
    CHECK(g.C == oracle::to_intmatrix({{-1, 1}, {0, 1}}));

    FGCSeed g2 = mutate_fgc(g, 1);
    LaurentPoly f2 = LaurentPoly::one(2) + LaurentPoly::variable(2, 0) +
                     LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1);
    CHECK(g2.F[1] == f2);

    CHECK(fgc_equal(mutate_fgc(g2, 1), g));
    CHECK(fgc_equal(mutate_fgc(mutate_fgc(g2, 0), 0), g2));
}

TEST_CASE("FGC data matches the principal-coefficient oracle on random walks") {
    oracle::Rng rng(211);
    for (int it = 0; it < 25; ++it) {
        int n = rng.range(2, 3);
        IntMatrix B = oracle::to_intmatrix(oracle::random_b(rng, n));
        FGCSeed g = initial_fgc(B);
        oracle::PSeed o = oracle::initial_pseed(oracle::to_mat(B));
        int prev = -1;
        for (int q = 0; q < rng.range(1, 4); ++q) {
            int k = rng.range(0, n - 1);
            if (k == prev) k = (k + 1) % n;
            prev = k;
            g = mutate_fgc(g, k);
            o = oracle::pmut(o, k);
        }
        for (int i = 0; i < n; ++i) {
            CHECK(oracle::homogeneous(o, i));
            CHECK(embed_f(g.F[i], n).equals(oracle::f_of(o, i)));
            auto gv = oracle::g_of(o, i);
            for (int j = 0; j < n; ++j) {
                CHECK(g.G.at(j, i) == gv[j]);
                CHECK(g.C.at(j, i) == o.cvec[i][j]); // tropical y = C columns
            }
        }
        CHECK(g.Bt == oracle::to_intmatrix(o.B));
    }
}

TEST_CASE("separation reconstructs x and y at a mutated node") {
    FGCSeed g = mutate_fgc(initial_fgc(a2()), 0);

    Seed p0 = initial_seed(a2(), CoeffPattern::Principal);
    auto xs = separation_x(g, p0);
    // x_{1;t1} = (x2 + y1)/x1 in Q(x1, x2, y1, y2)
    RationalFn want(LaurentPoly::variable(4, 1) + LaurentPoly::variable(4, 2),
                    LaurentPoly::variable(4, 0));
    CHECK(xs[0].equals(want));
    auto ys = separation_y(g, p0);
    CHECK(ys[0].exponents() == ExpVec{-1, 0});
    CHECK(ys[1].exponents() == ExpVec{1, 1});

    Seed t0 = initial_seed(a2(), CoeffPattern::Trivial);
    auto xt = separation_x(g, t0);
    RationalFn wt(LaurentPoly::variable(2, 1) + LaurentPoly::one(2),
                  LaurentPoly::variable(2, 0));
    CHECK(xt[0].equals(wt));

    Seed u0 = initial_seed(a2(), CoeffPattern::Universal);
    auto yu = separation_y(g, u0);
    SfElem y1 = SfElem::generator(SfKind::Universal, 2, 0);
    SfElem y2 = SfElem::generator(SfKind::Universal, 2, 1);
    CHECK(yu[1].equals(
        sf_mul(sf_mul(y1, y2), sf_inv(sf_oplus(SfElem::unit(SfKind::Universal, 2), y1)))));

    // Initial node: identity reconstruction.
    FGCSeed id = initial_fgc(a2());
    auto x0 = separation_x(id, p0);
    for (int i = 0; i < 2; ++i) CHECK(x0[i].equals(p0.x[i]));
    auto y0 = separation_y(id, u0);
    for (int i = 0; i < 2; ++i) CHECK(y0[i].equals(u0.y[i]));
}

TEST_CASE("separation equals direct mutation along random walks") {
    oracle::Rng rng(223);
    for (auto cp : {CoeffPattern::Trivial, CoeffPattern::Principal, CoeffPattern::Universal}) {
        for (int it = 0; it < 10; ++it) {
            int n = rng.range(2, 3);
            IntMatrix B = oracle::to_intmatrix(oracle::random_b(rng, n));
            Seed s0 = initial_seed(B, cp);
            Seed s = s0;
            FGCSeed g = initial_fgc(B);
            int prev = -1;
            for (int q = 0; q < 4; ++q) {
                int k = rng.range(0, n - 1);
                if (k == prev) k = (k + 1) % n;
                prev = k;
                s = mutate_seed(s, k);
                g = mutate_fgc(g, k);
            }
            auto xs = separation_x(g, s0);
            auto ys = separation_y(g, s0);
            for (int i = 0; i < n; ++i) {
                CHECK(xs[i].equals(s.x[i]));
                CHECK(ys[i].equals(s.y[i]));
            }
        }
    }
}

TEST_CASE("structural invariants hold and corruption is caught") {
    IntMatrix D = IntMatrix::identity(2);
    FGCSeed g = mutate_fgc(initial_fgc(a2()), 0);
    CHECK(no_fail(check_invariants(g, D)));
    CHECK(no_fail(check_invariants(initial_fgc(a2()), D)));

    FGCSeed bad = g;
    bad.C.at(0, 1) = -bad.C.at(0, 1); // break sign coherence of column 1
    Report r = check_invariants(bad, D);
    bool found = false;
    for (const auto& f : r)
        if (f.status == Status::Fail) found = true;
    CHECK(found);

    // Non-trivial skew-symmetrizer: B2.
    IntMatrix b2 = oracle::to_intmatrix({{0, 2}, {-1, 0}});
    IntMatrix d2 = skew_symmetrizer(b2);
    FGCSeed h = initial_fgc(b2);
    int prev = -1;
    oracle::Rng rng(227);
    for (int q = 0; q < 6; ++q) {
        int k = rng.range(0, 1);
        if (k == prev) k = 1 - k;
        prev = k;
        h = mutate_fgc(h, k);
        CHECK(no_fail(check_invariants(h, d2)));
    }
}

TEST_CASE("extract_sigma recognizes column permutations") {
    IntMatrix c = mutate_fgc(mutate_fgc(initial_fgc(a2()), 0), 1).C;
    auto id = extract_sigma(c, c);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());

    Permutation swap = Permutation::transposition(2, 0, 1);
    auto s = extract_sigma(permute_cols(c, swap), c);
    REQUIRE(s.has_value());
    CHECK(*s == swap);

    IntMatrix other = oracle::to_intmatrix({{1, 1}, {0, 1}});
    CHECK_FALSE(extract_sigma(other, IntMatrix::identity(2)).has_value());
}

TEST_CASE("detropicalization at the A2 pentagon endpoint") {
    FGCSeed g = initial_fgc(a2());
    for (int k : {0, 1, 0, 1, 0}) g = mutate_fgc(g, k);
    // G is the permutation matrix of (1 2) and all F-polynomials are 1.
    Permutation swap = Permutation::transposition(2, 0, 1);
    CHECK(g.G == swap.matrix());
    CHECK(no_fail(check_detrop(g)));
    for (const auto& f : g.F) CHECK(f == LaurentPoly::one(2));

    // Matching G up to sigma on a node pair forces matching F.
    FGCSeed a = mutate_fgc(initial_fgc(a2()), 0);
    FGCSeed b = permute_fgc(a, swap);
    auto sig = extract_sigma(a.G, b.G);
    REQUIRE(sig.has_value());
    CHECK(no_fail(check_detrop_pair(a, b, *sig)));
}

TEST_CASE("f_matrix reads per-variable max degrees") {
    CHECK(f_matrix(initial_fgc(a2())) == IntMatrix(2));
    FGCSeed g = mutate_fgc(mutate_fgc(initial_fgc(a2()), 0), 1);
    IntMatrix fm = f_matrix(g);
    CHECK(fm == oracle::to_intmatrix({{1, 1}, {0, 1}}));

    // A single mutation at k gives column k = e_k, other columns 0.
    oracle::Rng rng(229);
    IntMatrix B = oracle::to_intmatrix(oracle::random_b(rng, 3));
    for (int k = 0; k < 3; ++k) {
        IntMatrix fk = f_matrix(mutate_fgc(initial_fgc(B), k));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(fk.at(i, j) == ((i == k && j == k) ? 1 : 0));
    }
}

TEST_CASE("cross-dualities hold along words") {
    std::vector<int> pentagon{0, 1, 0, 1, 0};
    CHECK(no_fail(check_cross_duality(a2(), pentagon, CrossDuality::Transposition)));
    CHECK(no_fail(check_cross_duality(a2(), pentagon, CrossDuality::Chiral)));
    CHECK(no_fail(check_cross_duality(a2(), pentagon, CrossDuality::Langlands)));

    CHECK(no_fail(check_cross_duality(a2(), {}, CrossDuality::Chiral))); // initial: C' = I

    oracle::Rng rng(233);
    for (int it = 0; it < 5; ++it) {
        IntMatrix B = oracle::to_intmatrix(oracle::random_b(rng, 3));
        std::vector<int> word;
        int prev = -1;
        for (int q = 0; q < 5; ++q) {
            int k = rng.range(0, 2);
            if (k == prev) k = (k + 1) % 3;
            prev = k;
            word.push_back(k);
        }
        for (auto which :
             {CrossDuality::Transposition, CrossDuality::Chiral, CrossDuality::Langlands})
            CHECK(no_fail(check_cross_duality(B, word, which)));
    }
}

TEST_CASE("conjugate pair RB/BR intertwines G and C by R") {
    IntMatrix RB = oracle::to_intmatrix({{0, 2}, {-1, 0}});
    IntMatrix BR = oracle::to_intmatrix({{0, 1}, {-2, 0}});
    std::vector<int> R{2, 1};

    CHECK(no_fail(check_conjugate(RB, BR, R, {})));
    CHECK(no_fail(check_conjugate(RB, BR, R, {0})));
    // Hand values at the one-step node.
    FGCSeed left = mutate_fgc(initial_fgc(RB), 0);
    FGCSeed right = mutate_fgc(initial_fgc(BR), 0);
    CHECK(left.G == oracle::to_intmatrix({{-1, 0}, {1, 1}}));
    CHECK(right.G == oracle::to_intmatrix({{-1, 0}, {2, 1}}));

    oracle::Rng rng(239);
    std::vector<int> word;
    int prev = -1;
    for (int q = 0; q < 10; ++q) {
        int k = rng.range(0, 1);
        if (k == prev) k = 1 - k;
        prev = k;
        word.push_back(k);
    }
    CHECK(no_fail(check_conjugate(RB, BR, R, word)));
}

TEST_CASE("word labels are 1-based") {
    CHECK(word_label({0, 1, 0}, 3) == "1,2,1");
    CHECK(word_label({0, 1, 0}, 1) == "1");
    CHECK(word_label({}, 0) == "");
}
