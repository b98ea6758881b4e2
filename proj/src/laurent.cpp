#include "cluspat/laurent.hpp"

#include <limits>
#include <sstream>
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

Int int_pow(const Int& base, int64_t e) {
    Int r = 1, b = base;
    for (int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

} // namespace

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int64_t exp) {
    LaurentPoly p(nvars);
    ExpVec e(nvars, 0);
    e[i] = exp;
    if (exp == 0)
        p.terms_.emplace(ExpVec(nvars, 0), 1);
    else
        p.terms_.emplace(std::move(e), 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(ExpVec exps, Int coeff) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == ExpVec(nvars_, 0);
}

Int LaurentPoly::constant_term() const {
    auto it = terms_.find(ExpVec(nvars_, 0));
    return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return true;
    return false;
}

bool LaurentPoly::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (int64_t x : e)
            if (x < 0) return true;
    return false;
}

int64_t LaurentPoly::max_degree(int i) const {
    int64_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
    return m;
}

void LaurentPoly::check_ctx(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("LaurentPoly: variable-context mismatch");
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_ctx(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_ctx(o);
    LaurentPoly r(nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    check_ctx(d);
    if (is_zero()) return LaurentPoly(nvars_);
    // Normalize both operands to the polynomial ring by stripping their
    // monomial content; termination of leading-term division then follows
    // from lex being a well-order on nonnegative exponents. The quotient of
    // polynomials with zero per-variable minimum degree is itself a
    // polynomial, so no quotient exponent can go negative.
    auto min_exps = [this](const LaurentPoly& p) {
        ExpVec m(nvars_, std::numeric_limits<int64_t>::max());
        for (const auto& [e, c] : p.terms_)
            for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        return m;
    };
    ExpVec st = min_exps(*this), sd = min_exps(d);
    auto strip = [this](const LaurentPoly& p, const ExpVec& s) {
        LaurentPoly out(nvars_);
        for (const auto& [e, c] : p.terms_) {
            ExpVec f(nvars_);
            for (int i = 0; i < nvars_; ++i) f[i] = e[i] - s[i];
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    };
    LaurentPoly rem = strip(*this, st), dd = strip(d, sd), q(nvars_);
    const auto& dlead = *dd.terms_.rbegin(); // lex-largest term
    ExpVec e(nvars_);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (rlead.second % dlead.second != 0)
            throw std::runtime_error("LaurentPoly: nonzero remainder in exact division");
        bool divisible = true;
        for (int i = 0; i < nvars_; ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) divisible = false;
        }
        if (!divisible)
            throw std::runtime_error("LaurentPoly: nonzero remainder in exact division");
        Int c = rlead.second / dlead.second;
        q.add_term(e, c);
        rem = rem - dd * LaurentPoly::monomial(e, c);
        if (!rem.is_zero() && rem.terms_.rbegin()->first >= rlead.first)
            throw std::runtime_error("LaurentPoly: nonzero remainder in exact division");
    }
    ExpVec net(nvars_);
    for (int i = 0; i < nvars_; ++i) net[i] = st[i] - sd[i];
    return q * LaurentPoly::monomial(net, 1);
}

LaurentPoly LaurentPoly::pow(int64_t e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly: negative power");
    LaurentPoly r = LaurentPoly::one(nvars_), b = *this;
    for (int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_monomials(int new_nvars,
                                              const std::vector<ExpVec>& images) const {
    LaurentPoly r(new_nvars);
    ExpVec e(new_nvars);
    for (const auto& [old_e, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < new_nvars; ++j) e[j] += old_e[i] * images[i][j];
        r.add_term(e, c);
    }
    return r;
}

Int LaurentPoly::eval_int(const std::vector<Int>& point) const {
    // Negative exponents are handled by clearing them with a global monomial
    // first; the caller gets the value only when it is an exact integer.
    ExpVec shift(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) shift[i] = std::min(shift[i], e[i]);
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i) t *= int_pow(point[i], e[i] - shift[i]);
        acc += t;
    }
    Int denom = 1;
    for (int i = 0; i < nvars_; ++i) denom *= int_pow(point[i], -shift[i]);
    if (denom != 1) {
        if (acc % denom != 0)
            throw std::runtime_error("LaurentPoly: non-integer value at integer point");
        acc /= denom;
    }
    return acc;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1) { os << a; printed = true; }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << names[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

std::string LaurentPoly::to_string(char base) const {
    std::vector<std::string> names;
    names.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) names.push_back(std::string(1, base) + std::to_string(i + 1));
    return to_string(names);
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    if (num_.nvars() != den_.nvars())
        throw std::invalid_argument("RationalFn: variable-context mismatch");
    normalize();
}

RationalFn::RationalFn(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::one(num_.nvars())) {}

RationalFn RationalFn::variable(int nvars, int i, int64_t e) {
    return RationalFn(LaurentPoly::variable(nvars, i, e));
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(den_.nvars());
        return;
    }
    const int n = num_.nvars();
    // Common monomial factor across both parts.
    ExpVec m(n, std::numeric_limits<int64_t>::max());
    for (const auto* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms())
            for (int i = 0; i < n; ++i) m[i] = std::min(m[i], e[i]);
    // Integer content, with the sign fixed by the denominator's first term.
    Int g = 0;
    for (const auto* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms()) g = int_gcd(g, c);
    if (den_.terms().begin()->second < 0) g = -g;
    bool shift = false;
    for (int i = 0; i < n; ++i)
        if (m[i] != 0) shift = true;
    if (!shift && g == 1) return;
    auto strip = [&](const LaurentPoly& p) {
        LaurentPoly r(n);
        ExpVec e(n);
        for (const auto& [old_e, c] : p.terms()) {
            for (int i = 0; i < n; ++i) e[i] = old_e[i] - m[i];
            r.add_term(e, c / g);
        }
        return r;
    };
    num_ = strip(num_);
    den_ = strip(den_);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const { return *this * o.inverse(); }

RationalFn RationalFn::inverse() const {
    if (num_.is_zero()) throw std::invalid_argument("RationalFn: inverse of zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFn(num_.pow(e), den_.pow(e));
}

bool RationalFn::equals(const RationalFn& o) const {
    if (num_.nvars() != o.num_.nvars())
        throw std::invalid_argument("RationalFn: variable-context mismatch");
    return num_ * o.den_ == o.num_ * den_;
}

std::pair<Int, Int> RationalFn::eval_int(const std::vector<Int>& point) const {
    // Evaluate each half as value/clearing-monomial so that negative
    // exponents never force an integrality requirement.
    auto eval_frac = [&](const LaurentPoly& p) -> std::pair<Int, Int> {
        ExpVec shift(p.nvars(), 0);
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < p.nvars(); ++i) shift[i] = std::min(shift[i], e[i]);
        Int acc = 0;
        for (const auto& [e, c] : p.terms()) {
            Int t = c;
            for (int i = 0; i < p.nvars(); ++i) t *= int_pow(point[i], e[i] - shift[i]);
            acc += t;
        }
        Int denom = 1;
        for (int i = 0; i < p.nvars(); ++i) denom *= int_pow(point[i], -shift[i]);
        return {acc, denom};
    };
    auto [an, dn] = eval_frac(num_);
    auto [ad, dd] = eval_frac(den_);
    return {an * dd, dn * ad};
}

RationalFn RationalFn::shifted(int new_nvars, int offset) const {
    std::vector<ExpVec> images(num_.nvars());
    for (int i = 0; i < num_.nvars(); ++i) {
        images[i].assign(new_nvars, 0);
        images[i][offset + i] = 1;
    }
    return RationalFn(num_.substitute_monomials(new_nvars, images),
                      den_.substitute_monomials(new_nvars, images));
}

std::string RationalFn::to_string(const std::vector<std::string>& names) const {
    if (den_.is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::string RationalFn::to_string(char base) const {
    if (den_.is_one()) return num_.to_string(base);
    return "(" + num_.to_string(base) + ")/(" + den_.to_string(base) + ")";
}

RationalFn substitute(const LaurentPoly& p, const std::vector<RationalFn>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: unassigned variable");
    const int nv = images.empty() ? 0 : images[0].nvars();
    RationalFn acc(LaurentPoly::constant(nv, 0));
    for (const auto& [e, c] : p.terms()) {
        RationalFn t(LaurentPoly::constant(nv, c));
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

} // namespace cluspat
