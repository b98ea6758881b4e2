#pragma once

#include <optional>
#include <vector>

#include "cluspat/report.hpp"
#include "cluspat/seed.hpp"

namespace cluspat {

/// FGC-seed of a B-pattern: F-polynomials in u_1..u_n together with the
/// G- and C-matrices and the exchange matrix at the node. B0 is the exchange
/// matrix at the initial point; it enters the G-mutation rule and is shared
/// by every node of the pattern.
struct FGCSeed {
    std::vector<LaurentPoly> F;
    IntMatrix G, C, Bt, B0;

    int n() const { return Bt.n(); }
};

/// Initial FGC-seed: F = 1, G = C = I.
FGCSeed initial_fgc(const IntMatrix& B);

/// FGC mutation in direction k (0-based). The new F_k arises by exact
/// polynomial division; a nonzero remainder aborts (std::runtime_error),
/// since polynomiality is a theorem.
FGCSeed mutate_fgc(const FGCSeed& g, int k);

FGCSeed permute_fgc(const FGCSeed& g, const Permutation& sigma);

bool fgc_equal(const FGCSeed& a, const FGCSeed& b);

/// x_{i;t} = (prod_j x_j^{g_ji}) * F_i(yhat) / F_i|_P(y), over the initial seed.
std::vector<RationalFn> separation_x(const FGCSeed& g, const Seed& seed0);

/// y_{i;t} = (prod_j y_j^{c_ji}) * prod_j F_j|_P(y)^{b_ji}.
std::vector<SfElem> separation_y(const FGCSeed& g, const Seed& seed0);

/// Per-node structural identities: C-column sign-coherence, constant term 1,
/// coefficient positivity, polynomiality, G^T D C = D, D Bt = C^T (D B0) C,
/// |det G| = |det C| = 1. D must skew-symmetrize B0.
Report check_invariants(const FGCSeed& g, const IntMatrix& D, const std::string& node = "");

/// Degree matrix: entry (i,j) is the maximal exponent of u_i in F_j.
IntMatrix f_matrix(const FGCSeed& g);

/// If G is a permutation matrix, every F-polynomial must equal 1.
Report check_detrop(const FGCSeed& g, const std::string& node = "");

/// Given G_a = sigma G_b, asserts F_{i;a} = F_{sigma^-1(i);b} and
/// B_a = sigma B_b.
Report check_detrop_pair(const FGCSeed& a, const FGCSeed& b, const Permutation& sigma,
                         const std::string& node = "");

enum class CrossDuality { Transposition, Chiral, Langlands };

/// Walk the mutation word from the initial B and verify the named duality at
/// every node: Transposition pairs the pattern of B (initial point moved to
/// the current node) with the pattern of B^T rooted at the start; Chiral
/// pairs with -B via C' = C + FM * B and equal F-polynomials (FM the degree
/// matrix); Langlands pairs with -B^T via G^T C' = I.
Report check_cross_duality(const IntMatrix& B, const std::vector<int>& word, CrossDuality which);

/// Conjugate pair: patterns of RB and BR mutated along the same word satisfy
/// R G'_t = G_t R and R C'_t = C_t R at every node (primed = BR side).
Report check_conjugate(const IntMatrix& RB, const IntMatrix& BR, const std::vector<int>& R,
                       const std::vector<int>& word);

/// Render a mutation word as 1-based "k1,k2,..." ("" for the empty word).
std::string word_label(const std::vector<int>& word, size_t len);

} // namespace cluspat
