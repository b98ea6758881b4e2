#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cluspat/bigint.hpp"
#include "cluspat/matrix.hpp"

namespace cluspat {

/// Exponent vector of a Laurent monomial; entries may be negative.
using ExpVec = std::vector<int64_t>;

/// Multivariate Laurent polynomial with exact integer coefficients.
///
/// Canonical form: no zero coefficients are stored and terms are ordered
/// lexicographically on exponent vectors, so equal polynomials compare
/// equal componentwise and serialize identically.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, Int c);
    static LaurentPoly one(int nvars) { return constant(nvars, 1); }
    static LaurentPoly variable(int nvars, int i, int64_t exp = 1);
    static LaurentPoly monomial(ExpVec exps, Int coeff = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Int>& terms() const { return terms_; }

    /// Coefficient of the all-zero exponent vector.
    Int constant_term() const;
    bool has_negative_coeff() const;
    bool has_negative_exponent() const;
    /// Max exponent of variable i over all terms (0 for the zero polynomial).
    int64_t max_degree(int i) const;

    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }

    void add_term(const ExpVec& e, const Int& c); // merges, drops zeros

    /// Exact division: returns q with *this == q * d. Throws if the division
    /// leaves a remainder or the divisor is zero.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    LaurentPoly pow(int64_t e) const; // e >= 0

    /// Substitute variable i -> given monomial power expression u_i^{map[i]}...
    /// General variable-count-changing substitution of each variable by a monomial.
    LaurentPoly substitute_monomials(int new_nvars, const std::vector<ExpVec>& images) const;

    /// Evaluate at exact integer points (all variables must get nonzero values
    /// when negative exponents are present).
    Int eval_int(const std::vector<Int>& point) const;

    /// Canonical text, e.g. "-3*x1^-2*x2 + x2 + 1" with the given variable names.
    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string(char base = 'u') const;

private:
    int nvars_ = 0;
    std::map<ExpVec, Int> terms_;
    void check_ctx(const LaurentPoly& o) const;
};

/// Fraction of Laurent polynomials. Not reduced to lowest terms; equality is
/// decided by cross-multiplication. Normalization only extracts the common
/// monomial factor and the integer content to keep sizes bounded.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(LaurentPoly num, LaurentPoly den);
    explicit RationalFn(LaurentPoly num);

    static RationalFn one(int nvars) { return RationalFn(LaurentPoly::one(nvars)); }
    static RationalFn variable(int nvars, int i, int64_t e = 1);

    int nvars() const { return num_.nvars(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn inverse() const;
    RationalFn pow(int64_t e) const; // negative allowed

    /// Equality as rational functions (cross-multiplication).
    bool equals(const RationalFn& o) const;

    /// Exact evaluation at an integer point; returns (num_value, den_value).
    std::pair<Int, Int> eval_int(const std::vector<Int>& point) const;

    /// Reinterpret over a wider variable set, shifting variable indices by `offset`.
    RationalFn shifted(int new_nvars, int offset) const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string(char base = 'x') const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

/// Substitute each variable of p by a rational function (exact composition).
RationalFn substitute(const LaurentPoly& p, const std::vector<RationalFn>& images);

} // namespace cluspat
