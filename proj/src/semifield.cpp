#include "cluspat/semifield.hpp"

#include <algorithm>
#include <map>

namespace cluspat {

using detail::UnivNode;

std::string to_string(SfKind k) {
    switch (k) {
    case SfKind::Universal: return "universal";
    case SfKind::Tropical: return "tropical";
    case SfKind::Trivial: return "trivial";
    }
    throw std::logic_error("bad SfKind");
}

SfElem SfElem::unit(SfKind kind, int m) {
    SfElem e;
    e.kind_ = kind;
    e.m_ = m;
    switch (kind) {
    case SfKind::Trivial:
        break;
    case SfKind::Tropical:
        e.exps_.assign(m, 0);
        break;
    case SfKind::Universal:
        e.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Const, -1, 1, nullptr, nullptr});
        e.value_ = RationalFn::one(m);
        break;
    }
    return e;
}

SfElem SfElem::generator(SfKind kind, int m, int i) {
    if (i < 0 || i >= m) throw std::out_of_range("SfElem::generator: index");
    SfElem e = unit(kind, m);
    switch (kind) {
    case SfKind::Trivial:
        break;
    case SfKind::Tropical:
        e.exps_[i] = 1;
        break;
    case SfKind::Universal:
        e.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Gen, i, 0, nullptr, nullptr});
        e.value_ = RationalFn::variable(m, i);
        break;
    }
    return e;
}

SfElem SfElem::tropical(ExpVec exps) {
    SfElem e;
    e.kind_ = SfKind::Tropical;
    e.m_ = static_cast<int>(exps.size());
    e.exps_ = std::move(exps);
    return e;
}

SfElem SfElem::constant(SfKind kind, int m, const Int& c) {
    if (c <= 0) throw PositivityViolation("semifield constant must be positive, got " + c.str());
    SfElem e = unit(kind, m);
    if (kind == SfKind::Universal && c != 1) {
        e.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Const, -1, c, nullptr, nullptr});
        e.value_ = RationalFn(LaurentPoly::constant(m, c));
    }
    return e;
}

const ExpVec& SfElem::exponents() const {
    if (kind_ != SfKind::Tropical) throw std::logic_error("SfElem::exponents: not tropical");
    return exps_;
}

const RationalFn& SfElem::value() const {
    if (kind_ != SfKind::Universal) throw std::logic_error("SfElem::value: not universal");
    return value_;
}

void SfElem::check_same(const SfElem& o) const {
    if (kind_ != o.kind_ || m_ != o.m_)
        throw std::invalid_argument("SfElem: semifield mismatch");
}

bool SfElem::equals(const SfElem& o) const {
    check_same(o);
    switch (kind_) {
    case SfKind::Trivial: return true;
    case SfKind::Tropical: return exps_ == o.exps_;
    case SfKind::Universal: return value_.equals(o.value_);
    }
    throw std::logic_error("bad SfKind");
}

bool SfElem::is_unit() const { return equals(unit(kind_, m_)); }

std::string SfElem::to_string() const {
    switch (kind_) {
    case SfKind::Trivial:
        return "1";
    case SfKind::Tropical: {
        bool all0 = std::all_of(exps_.begin(), exps_.end(), [](int64_t v) { return v == 0; });
        if (all0) return "1";
        return LaurentPoly::monomial(exps_).to_string('y');
    }
    case SfKind::Universal:
        return value_.to_string('y');
    }
    throw std::logic_error("bad SfKind");
}

SfElem sf_mul(const SfElem& a, const SfElem& b) {
    a.check_same(b);
    SfElem r = a;
    switch (a.kind_) {
    case SfKind::Trivial:
        break;
    case SfKind::Tropical:
        for (int i = 0; i < a.m_; ++i) r.exps_[i] += b.exps_[i];
        break;
    case SfKind::Universal:
        r.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Mul, -1, 0, a.node_, b.node_});
        r.value_ = a.value_ * b.value_;
        break;
    }
    return r;
}

SfElem sf_inv(const SfElem& a) {
    SfElem r = a;
    switch (a.kind_) {
    case SfKind::Trivial:
        break;
    case SfKind::Tropical:
        for (auto& v : r.exps_) v = -v;
        break;
    case SfKind::Universal:
        r.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Inv, -1, 0, a.node_, nullptr});
        r.value_ = a.value_.inverse();
        break;
    }
    return r;
}

SfElem sf_pow(const SfElem& a, int64_t e) {
    if (e < 0) return sf_pow(sf_inv(a), -e);
    SfElem r = SfElem::unit(a.kind(), a.gens());
    SfElem b = a;
    for (int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) r = sf_mul(r, b);
        if (k > 1) b = sf_mul(b, b);
    }
    return r;
}

SfElem sf_oplus(const SfElem& a, const SfElem& b) {
    a.check_same(b);
    SfElem r = a;
    switch (a.kind_) {
    case SfKind::Trivial:
        break;
    case SfKind::Tropical:
        for (int i = 0; i < a.m_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        break;
    case SfKind::Universal:
        r.node_ = std::make_shared<UnivNode>(UnivNode{UnivNode::Op::Oplus, -1, 0, a.node_, b.node_});
        r.value_ = a.value_ + b.value_;
        break;
    }
    return r;
}

SfElem sf_eval_poly(const LaurentPoly& p, const std::vector<SfElem>& args) {
    if (static_cast<int>(args.size()) != p.nvars())
        throw std::invalid_argument("sf_eval_poly: arity mismatch");
    if (p.is_zero()) throw std::invalid_argument("sf_eval_poly: zero is not a semifield element");
    SfKind kind = args.empty() ? SfKind::Trivial : args[0].kind();
    int m = args.empty() ? 0 : args[0].gens();
    bool first = true;
    SfElem acc;
    for (const auto& [e, c] : p.terms()) {
        if (c < 0)
            throw PositivityViolation("sf_eval_poly: negative coefficient " + c.str());
        SfElem t = SfElem::constant(kind, m, c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0) t = sf_mul(t, sf_pow(args[i], e[i]));
        acc = first ? t : sf_oplus(acc, t);
        first = false;
    }
    return acc;
}

SfElem sf_hom(const SfElem& src, SfKind dst, const std::vector<SfElem>& images) {
    if (src.kind_ != SfKind::Universal)
        throw std::invalid_argument("sf_hom: source must be universal");
    if (static_cast<int>(images.size()) != src.m_)
        throw std::invalid_argument("sf_hom: arity mismatch");
    for (const auto& im : images)
        if (im.kind() != dst) throw std::invalid_argument("sf_hom: image kind mismatch");
    int dm = images.empty() ? 0 : images[0].gens();

    std::map<const UnivNode*, SfElem> memo;
    auto eval = [&](auto&& self, const UnivNode* n) -> SfElem {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        SfElem r;
        switch (n->op) {
        case UnivNode::Op::Gen:
            r = images[n->gen];
            break;
        case UnivNode::Op::Const:
            r = SfElem::constant(dst, dm, n->c);
            break;
        case UnivNode::Op::Mul:
            r = sf_mul(self(self, n->a.get()), self(self, n->b.get()));
            break;
        case UnivNode::Op::Inv:
            r = sf_inv(self(self, n->a.get()));
            break;
        case UnivNode::Op::Oplus:
            r = sf_oplus(self(self, n->a.get()), self(self, n->b.get()));
            break;
        }
        memo.emplace(n, r);
        return r;
    };
    return eval(eval, src.node_.get());
}

} // namespace cluspat
