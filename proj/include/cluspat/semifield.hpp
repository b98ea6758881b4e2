#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluspat/laurent.hpp"

namespace cluspat {

enum class SfKind { Universal, Tropical, Trivial };

std::string to_string(SfKind k);

/// Thrown when a polynomial with a negative coefficient reaches semifield
/// evaluation. Callers that probe positivity conjectures catch this.
struct PositivityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
/// Node of the subtraction-free construction DAG of a universal element.
struct UnivNode {
    enum class Op { Gen, Const, Mul, Inv, Oplus };
    Op op;
    int gen = -1;                            // Op::Gen
    Int c;                                   // Op::Const (positive)
    std::shared_ptr<const UnivNode> a, b;    // operands
};
} // namespace detail

/// Element of one of the three coefficient semifields.
///
/// Universal elements record how they were built from the generators via
/// {·, ⁻¹, ⊕}; that expression tree is what homomorphisms act on, while
/// equality is decided on the cached rational-function value. Tropical
/// elements are Laurent monomials with coefficient 1, stored as exponent
/// vectors; ⊕ is componentwise min. The trivial semifield has one element.
class SfElem {
public:
    SfElem() = default;

    static SfElem unit(SfKind kind, int m);
    static SfElem generator(SfKind kind, int m, int i);
    /// Tropical monomial with the given exponents.
    static SfElem tropical(ExpVec exps);
    /// Positive integer constant (maps to the unit in Tropical/Trivial).
    static SfElem constant(SfKind kind, int m, const Int& c);

    SfKind kind() const { return kind_; }
    int gens() const { return m_; }

    const ExpVec& exponents() const;      // Tropical only
    const RationalFn& value() const;      // Universal only

    bool equals(const SfElem& o) const;
    bool is_unit() const;

    std::string to_string() const;

    friend SfElem sf_mul(const SfElem& a, const SfElem& b);
    friend SfElem sf_inv(const SfElem& a);
    friend SfElem sf_oplus(const SfElem& a, const SfElem& b);
    friend SfElem sf_hom(const SfElem& src, SfKind dst, const std::vector<SfElem>& images);

private:
    SfKind kind_ = SfKind::Trivial;
    int m_ = 0;
    ExpVec exps_;                                   // Tropical
    std::shared_ptr<const detail::UnivNode> node_;  // Universal
    RationalFn value_;                              // Universal
    void check_same(const SfElem& o) const;
};

SfElem sf_mul(const SfElem& a, const SfElem& b);
SfElem sf_inv(const SfElem& a);
SfElem sf_pow(const SfElem& a, int64_t e);
SfElem sf_oplus(const SfElem& a, const SfElem& b);

/// Evaluate a positive-coefficient Laurent polynomial at semifield elements,
/// with + read as ⊕. Throws PositivityViolation on a negative coefficient.
SfElem sf_eval_poly(const LaurentPoly& p, const std::vector<SfElem>& args);

/// Image of a universal element under the semifield homomorphism determined
/// by the generator images (all of kind dst). Computed structurally on the
/// recorded subtraction-free expression; memoized over shared subterms.
SfElem sf_hom(const SfElem& src, SfKind dst, const std::vector<SfElem>& images);

} // namespace cluspat
