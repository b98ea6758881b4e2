#pragma once

#include <vector>

#include "cluspat/matrix.hpp"
#include "cluspat/semifield.hpp"

namespace cluspat {

/// The standard coefficient patterns rooted at the initial point.
/// YPrincipal differs from Principal only in degree-R patterns (z frozen at 1);
/// for degree-1 patterns the two coincide.
enum class CoeffPattern { Trivial, Principal, YPrincipal, Universal };

std::string to_string(CoeffPattern p);

/// Matrix mutation in direction k (0-based). Involutive; preserves any
/// skew-symmetrizer of B.
IntMatrix b_mutate(const IntMatrix& B, int k);

/// Minimal positive-integer diagonal D with DB skew-symmetric.
/// Throws std::invalid_argument when B is not skew-symmetrizable.
IntMatrix skew_symmetrizer(const IntMatrix& B);

/// Labeled seed with coefficients in a semifield. Cluster variables live in
/// the ambient field of rational functions in n + m variables: indices
/// 0..n-1 are the initial cluster variables, n..n+m-1 the semifield
/// generators (m = 0 for trivial coefficients).
struct Seed {
    int n = 0;
    SfKind kind = SfKind::Trivial;
    int m = 0;
    std::vector<RationalFn> x;
    std::vector<SfElem> y;
    IntMatrix B;
    IntMatrix D;

    int ambient_vars() const { return n + m; }
};

struct YSeed {
    int n = 0;
    SfKind kind = SfKind::Trivial;
    int m = 0;
    std::vector<SfElem> y;
    IntMatrix B;
    IntMatrix D;
};

/// Initial seed at the root: x_i the i-th field generator, y_i per pattern
/// (trivial -> unit; principal -> tropical generator; universal -> universal
/// generator), B as given.
Seed initial_seed(const IntMatrix& B, CoeffPattern cp);
YSeed initial_yseed(const IntMatrix& B, CoeffPattern cp);

/// Embed a coefficient into the ambient field of a seed with n x-variables.
RationalFn sf_to_field(const SfElem& p, int n);

/// yhat_i = y_i * prod_j x_j^{b_ji}, as elements of the ambient field.
std::vector<RationalFn> compute_yhat(const Seed& s);

Seed mutate_seed(const Seed& s, int k);
YSeed mutate_yseed(const YSeed& s, int k);

Seed permute_seed(const Seed& s, const Permutation& sigma);
YSeed permute_seed(const YSeed& s, const Permutation& sigma);

/// Exact equality of all components (x via cross-multiplication).
bool seeds_equal(const Seed& a, const Seed& b);
bool seeds_equal(const YSeed& a, const YSeed& b);

} // namespace cluspat
