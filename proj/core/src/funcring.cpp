// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/funcring.hpp"

#include "mwlat/errors.hpp"

namespace mwlat {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldCtx& ctx, const FieldElement& c) {
    Poly out(ctx);
    if (!c.is_zero()) out.c_.push_back(c);
    return out;
}

Poly Poly::constant(const FieldCtx& ctx, long c) { return constant(ctx, FieldElement::from_int(ctx, c)); }

Poly Poly::variable(const FieldCtx& ctx) {
    Poly out(ctx);
    out.c_.push_back(FieldElement(ctx));
    out.c_.push_back(FieldElement::from_int(ctx, 1));
    return out;
}

Poly Poly::monomial(const FieldCtx& ctx, const FieldElement& c, size_t deg) {
    Poly out(ctx);
    if (c.is_zero()) return out;
    out.c_.assign(deg, FieldElement(ctx));
    out.c_.push_back(c);
    return out;
}

Poly Poly::from_coeffs(const FieldCtx& ctx, std::vector<FieldElement> coeffs) {
    Poly out(ctx);
    out.c_ = std::move(coeffs);
    out.trim();
    return out;
}

Poly Poly::tq_minus_t(const FieldCtx& ctx, unsigned long q) {
    if (q < 2) throw invalid_family_error("t^q - t needs q >= 2");
    Poly out(ctx);
    out.c_.assign(q + 1, FieldElement(ctx));
    out.c_[1] = FieldElement::from_int(ctx, -1);
    out.c_[q] = FieldElement::from_int(ctx, 1);
    return out;
}

const FieldCtx& Poly::ctx() const {
    if (!ctx_) throw internal_error("operation on detached Poly");
    return *ctx_;
}

int Poly::degree() const {
    if (c_.empty()) throw internal_error("degree of the zero polynomial requested");
    return static_cast<int>(c_.size()) - 1;
}

FieldElement Poly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return FieldElement(ctx());
}

const FieldElement& Poly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && leading().is_one(); }

Poly Poly::operator+(const Poly& o) const {
    const FieldCtx& f = ctx();
    Poly out(f);
    size_t n = std::max(c_.size(), o.c_.size());
    out.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement v = i < c_.size() ? c_[i] : FieldElement(f);
        if (i < o.c_.size()) v += o.c_[i];
        out.c_.push_back(v);
    }
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly out(ctx());
    out.c_.reserve(c_.size());
    for (const auto& v : c_) out.c_.push_back(-v);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    const FieldCtx& f = ctx();
    Poly out(f);
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, FieldElement(f));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    out.trim(); // integral domain: product of nonzeros is nonzero, but stay safe
    return out;
}

Poly Poly::operator*(const FieldElement& c) const { return *this * constant(ctx(), c); }

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    const FieldCtx& f = ctx();
    if (divisor.is_zero()) throw internal_error("polynomial division by zero");
    Poly q(f), r = *this;
    if (is_zero() || c_.size() < divisor.c_.size()) return {q, r};
    FieldElement lc_inv = divisor.leading().inverse();
    q.c_.assign(c_.size() - divisor.c_.size() + 1, FieldElement(f));
    while (!r.is_zero() && r.c_.size() >= divisor.c_.size()) {
        FieldElement coef = r.leading() * lc_inv;
        size_t shift = r.c_.size() - divisor.c_.size();
        q.c_[shift] = coef;
        for (size_t i = 0; i < divisor.c_.size(); ++i) r.c_[shift + i] -= coef * divisor.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::pow(unsigned long e) const {
    Poly out = constant(ctx(), 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

Poly Poly::derivative() const {
    const FieldCtx& f = ctx();
    Poly out(f);
    if (c_.size() <= 1) return out;
    out.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        out.c_.push_back(c_[i] * FieldElement::from_int(f, static_cast<long>(i % f.p)));
    out.trim();
    return out;
}

FieldElement Poly::evaluate(const FieldElement& x) const {
    FieldElement acc(ctx());
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw internal_error("monic() of the zero polynomial");
    return *this * leading().inverse();
}

long Poly::root_multiplicity(const FieldElement& alpha) const {
    if (is_zero()) throw internal_error("root multiplicity of the zero polynomial");
    Poly linear = variable(ctx()) - constant(ctx(), alpha);
    Poly cur = *this;
    long mult = 0;
    while (true) {
        auto [q, r] = cur.divrem(linear);
        if (!r.is_zero()) return mult;
        ++mult;
        cur = q;
        if (cur.is_zero()) throw internal_error("root multiplicity loop ran past degree");
    }
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    if (x.is_zero() && y.is_zero()) throw internal_error("gcd(0, 0) undefined");
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

RationalFunction::RationalFunction(const FieldCtx& ctx) : num_(ctx), den_(Poly::constant(ctx, 1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw internal_error("rational function with zero denominator");
    canonicalize();
}

RationalFunction::RationalFunction(const Poly& num) : num_(num), den_(Poly::constant(num.ctx(), 1)) {}

RationalFunction RationalFunction::constant(const FieldCtx& ctx, long c) {
    return RationalFunction(Poly::constant(ctx, c));
}

RationalFunction RationalFunction::variable(const FieldCtx& ctx) {
    return RationalFunction(Poly::variable(ctx));
}

void RationalFunction::canonicalize() {
    const FieldCtx& f = num_.ctx();
    if (num_.is_zero()) {
        den_ = Poly::constant(f, 1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    FieldElement lc_inv = den_.leading().inverse();
    num_ = num_ * lc_inv;
    den_ = den_ * lc_inv;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw internal_error("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

long ord_at(const RationalFunction& x, const FieldElement& alpha) {
    if (x.is_zero()) throw internal_error("ord_at of the zero function");
    return x.num().root_multiplicity(alpha) - x.den().root_multiplicity(alpha);
}

long ord_infinity(const RationalFunction& x) {
    if (x.is_zero()) throw internal_error("ord_infinity of the zero function");
    return x.den().degree() - x.num().degree();
}

long naive_degree(const RationalFunction& x) {
    if (x.is_zero()) return 0; // x = 0 is the constant case
    return std::max(x.num().degree(), x.den().degree());
}

} // namespace mwlat
