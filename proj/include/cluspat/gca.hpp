#pragma once

#include "cluspat/fgc.hpp"

namespace cluspat {

/// Diagonal of the degree matrix R; all entries >= 1. With all entries 1
/// every degree-R formula reduces to its ordinary counterpart.
using DegreeR = std::vector<int>;

/// Variable layout of degree-R F-polynomials: u_1..u_n first, then the
/// v_{i,s} blocks (s = 1..r_i-1) in order of i.
int gca_vars(int n, const DegreeR& r);
/// Index of v_{i,s} (s is 1-based) in that layout.
int v_index(int n, const DegreeR& r, int i, int s);

/// Seed of degree R. z[i] holds z_{i,s} for s = 1..r_i-1 (empty when r_i = 1);
/// the boundary coefficients z_{i,0} = z_{i,r_i} = 1 are implicit. The
/// exchange polynomial is Z_i(eta) = sum_s z_{i,s} eta^s.
struct GCASeed {
    int n = 0;
    SfKind kind = SfKind::Trivial;
    int m = 0;
    DegreeR r;
    std::vector<RationalFn> x;
    std::vector<SfElem> y;
    std::vector<std::vector<SfElem>> z;
    IntMatrix B;

    int ambient_vars() const { return n + m; }
};

/// FGC-seed of degree R: F-polynomials in (u, v), G- and C-matrices, the
/// current and initial exchange matrices, and the v-state. vflip[i] records
/// whether v_{i,s;t} = v_{i,r_i-s} (true) or v_{i,s} (false) at this node.
struct GCAFGCSeed {
    DegreeR r;
    std::vector<LaurentPoly> F;
    IntMatrix G, C, Bt, B0;
    std::vector<bool> vflip;

    int n() const { return Bt.n(); }
};

/// Exchange-matrix mutation of degree R: the off-diagonal update carries the
/// factor r_k. RB and BR then mutate as ordinary exchange matrices.
IntMatrix gb_mutate(const IntMatrix& B, const DegreeR& r, int k);

/// Initial seed with the standard coefficient patterns. Universal/principal
/// use Trop- or Q_sf-generators for both y and z; y-principal freezes z at 1.
GCASeed initial_gca_seed(const IntMatrix& B, const DegreeR& r, CoeffPattern cp);

GCAFGCSeed initial_gca_fgc(const IntMatrix& B, const DegreeR& r);

GCASeed mutate_gca_seed(const GCASeed& s, int k);

GCAFGCSeed mutate_gca_fgc(const GCAFGCSeed& g, int k);

GCASeed permute_gca_seed(const GCASeed& s, const Permutation& sigma);

bool gca_seeds_equal(const GCASeed& a, const GCASeed& b);
bool gca_fgc_equal(const GCAFGCSeed& a, const GCAFGCSeed& b);

/// Separation reconstruction: x via G and F(yhat, z), y via C and F|_P(y, z).
std::vector<RationalFn> gca_separation_x(const GCAFGCSeed& g, const GCASeed& seed0);
std::vector<SfElem> gca_separation_y(const GCAFGCSeed& g, const GCASeed& seed0);

/// Companion identities against the patterns of RB (left) and BR (right)
/// mutated along the same word: R G = lG R, C = lC; G = rG, C R = R rC;
/// F(u, v -> binom(r_i, s)) = lF_i^{r_i}; F(u, 0) = rF(u_i^{r_i}).
Report companion_check(const GCAFGCSeed& g, const FGCSeed& left, const FGCSeed& right,
                       const std::string& node = "");

/// sigma(i) = i whenever r_i >= 2.
bool check_strong_compat(const Permutation& sigma, const DegreeR& r);

/// Per-node identities of degree-R FGC-seeds. D must skew-symmetrize R B0.
/// A coefficient-positivity violation is reported with Status::Conjecture.
Report check_gca_invariants(const GCAFGCSeed& g, const IntMatrix& D,
                            const std::string& node = "");

/// If G is a permutation matrix, every F must be 1.
Report check_gca_detrop(const GCAFGCSeed& g, const std::string& node = "");

/// Given G_a = sigma G_b: sigma strongly R-compatible, F_{i;a} = F_{sigma^-1(i);b}
/// verbatim, v-states equal, B_a = sigma B_b.
Report check_gca_detrop_pair(const GCAFGCSeed& a, const GCAFGCSeed& b,
                             const Permutation& sigma, const std::string& node = "");

} // namespace cluspat
