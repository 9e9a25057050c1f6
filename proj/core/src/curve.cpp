// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/curve.hpp"

#include "mwlat/errors.hpp"

#include <algorithm>

namespace mwlat {

WeierstrassCurve::WeierstrassCurve(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    const FieldCtx& f = a1_.ctx();
    if (!a2_.ctx().same_field(f) || !a3_.ctx().same_field(f) || !a4_.ctx().same_field(f) ||
        !a6_.ctx().same_field(f))
        throw internal_error("curve coefficients live in different fields");
    if (discriminant().is_zero()) throw construction_error("singular Weierstrass model (zero discriminant)");
}

Poly WeierstrassCurve::discriminant() const {
    const FieldCtx& f = ctx();
    auto k = [&](long v) { return Poly::constant(f, v); };
    Poly b2 = a1_ * a1_ + k(4) * a2_;
    Poly b4 = k(2) * a4_ + a1_ * a3_;
    Poly b6 = a3_ * a3_ + k(4) * a6_;
    Poly b8 = a1_ * a1_ * a6_ + k(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    return -(b2 * b2 * b8) - k(8) * (b4 * b4 * b4) - k(27) * (b6 * b6) + k(9) * (b2 * b4 * b6);
}

bool WeierstrassCurve::is_short_form() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }

CurvePoint CurvePoint::identity() { return CurvePoint(); }

CurvePoint::CurvePoint(RationalFunction x, RationalFunction y)
    : coords_(std::make_pair(std::move(x), std::move(y))) {}

const RationalFunction& CurvePoint::x() const {
    if (is_identity()) throw internal_error("coordinates of the identity point");
    return coords_->first;
}

const RationalFunction& CurvePoint::y() const {
    if (is_identity()) throw internal_error("coordinates of the identity point");
    return coords_->second;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (is_identity() || o.is_identity()) return is_identity() == o.is_identity();
    return x() == o.x() && y() == o.y();
}

namespace {

int compare_poly(const Poly& a, const Poly& b) {
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    for (size_t i = ca.size(); i-- > 0;) {
        BigInt va = ca[i].to_integer(), vb = cb[i].to_integer();
        if (va != vb) return va < vb ? -1 : 1;
    }
    return 0;
}

int compare_rf(const RationalFunction& a, const RationalFunction& b) {
    if (int c = compare_poly(a.num(), b.num())) return c;
    return compare_poly(a.den(), b.den());
}

} // namespace

bool point_less(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_identity() || b.is_identity()) return a.is_identity() && !b.is_identity();
    if (int c = compare_rf(a.x(), b.x())) return c < 0;
    return compare_rf(a.y(), b.y()) < 0;
}

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.is_identity()) return true;
    const RationalFunction& x = P.x();
    const RationalFunction& y = P.y();
    if (!x.ctx().same_field(E.ctx())) throw internal_error("point/curve field mismatch");
    RationalFunction a1(E.a1()), a2(E.a2()), a3(E.a3()), a4(E.a4()), a6(E.a6());
    RationalFunction lhs = y * y + a1 * x * y + a3 * y;
    RationalFunction rhs = x * x * x + a2 * x * x + a4 * x + a6;
    return lhs == rhs;
}

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.is_identity()) return P;
    RationalFunction a1(E.a1()), a3(E.a3());
    return CurvePoint(P.x(), -P.y() - a1 * P.x() - a3);
}

CurvePoint dbl(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.is_identity()) return P;
    const FieldCtx& f = E.ctx();
    RationalFunction a1(E.a1()), a2(E.a2()), a3(E.a3()), a4(E.a4());
    const RationalFunction& x = P.x();
    const RationalFunction& y = P.y();
    RationalFunction denom = RationalFunction::constant(f, 2) * y + a1 * x + a3;
    if (denom.is_zero()) return CurvePoint::identity(); // 2-torsion
    RationalFunction three = RationalFunction::constant(f, 3);
    RationalFunction two = RationalFunction::constant(f, 2);
    RationalFunction lambda = (three * x * x + two * a2 * x + a4 - a1 * y) / denom;
    RationalFunction x3 = lambda * lambda + a1 * lambda - a2 - two * x;
    RationalFunction y3 = lambda * (x - x3) - y - a1 * x3 - a3;
    return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_identity()) return Q;
    if (Q.is_identity()) return P;
    RationalFunction a1(E.a1()), a2(E.a2()), a3(E.a3());
    if (P.x() == Q.x()) {
        // either Q = -P or Q = P
        RationalFunction neg_y = -P.y() - a1 * P.x() - a3;
        if (Q.y() == neg_y) return CurvePoint::identity();
        return dbl(E, P);
    }
    RationalFunction lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    RationalFunction x3 = lambda * lambda + a1 * lambda - a2 - P.x() - Q.x();
    RationalFunction y3 = lambda * (P.x() - x3) - P.y() - a1 * x3 - a3;
    return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint mul_scalar(const WeierstrassCurve& E, long n, const CurvePoint& P) {
    if (n < -8 || n > 8)
        throw internal_error("mul_scalar capped at |n| <= 8 (heights grow quadratically)");
    if (n == 0 || P.is_identity()) return CurvePoint::identity();
    CurvePoint base = n < 0 ? neg(E, P) : P;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    CurvePoint acc = CurvePoint::identity();
    for (size_t bit = 4; bit-- > 0;) {
        acc = dbl(E, acc);
        if (e & (1ul << bit)) acc = add(E, acc, base);
    }
    return acc;
}

unsigned long CurveE1Params::q() const {
    unsigned long out = 1;
    for (unsigned long i = 0; i < c; ++i) out *= p;
    return out;
}

void CurveE1Params::validate() const {
    SufficiencyCheck check = check_sufficiently_large(p, c, s);
    if (!check.ok())
        throw invalid_family_error("r = p^s is not sufficiently large: condition " +
                                   check.failed_condition() + " fails");
}

WeierstrassCurve e1_curve(const FieldCtx& ctx, const CurveE1Params& params) {
    params.validate();
    if (ctx.p != params.p || ctx.s != params.s)
        throw internal_error("field context does not match E1 parameters");
    Poly zero(ctx);
    return WeierstrassCurve(zero, zero, zero, zero, Poly::tq_minus_t(ctx, params.q()));
}

ExplicitSeedSet make_seed_set(const FieldCtx& ctx, const CurveE1Params& params) {
    params.validate();
    ExplicitSeedSet seeds;
    seeds.sigmas = solve_sigma(ctx, params.q());
    seeds.betas = solve_beta(ctx, params.q());
    return seeds;
}

std::vector<CurvePoint> e1_explicit_points(const FieldCtx& ctx, const CurveE1Params& params,
                                           const ExplicitSeedSet& seeds) {
    params.validate();
    unsigned long q = params.q();
    if (seeds.sigmas.size() != 6 * (q - 1) || seeds.betas.size() != q)
        throw construction_error("seed set incomplete");
    WeierstrassCurve E = e1_curve(ctx, params);
    unsigned long e_x = (q + 1) / 3;
    unsigned long e_y = (q + 1) / 2;
    Poly t = Poly::variable(ctx);
    std::vector<CurvePoint> points;
    points.reserve(6 * q * (q - 1));
    for (const FieldElement& sigma : seeds.sigmas) {
        FieldElement s2 = sigma * sigma;
        FieldElement s3 = s2 * sigma;
        FieldElement s6_inv = (s3 * s3).inverse();
        for (const FieldElement& beta : seeds.betas) {
            FieldElement gamma = beta * s6_inv;
            Poly x_poly = (t - Poly::constant(ctx, gamma)).pow(e_x) * s2;
            RationalFunction x{x_poly};
            // the second coordinate's inner exponent is ambiguous in the
            // source formula; try both readings and both signs and keep
            // what lands on the curve
            Poly y_candidates[2] = {
                (t - Poly::constant(ctx, gamma.pow(BigInt(q)))).pow(e_y) * s3,
                (t - Poly::constant(ctx, gamma)).pow(e_y) * s3,
            };
            bool found = false;
            for (const Poly& y_poly : y_candidates) {
                for (int sign = 0; sign < 2; ++sign) {
                    RationalFunction y{sign ? -y_poly : y_poly};
                    CurvePoint P(x, y);
                    if (on_curve(E, P)) {
                        points.push_back(std::move(P));
                        found = true;
                    }
                }
            }
            if (!found)
                throw construction_error("no on-curve candidate for sigma = " + sigma.to_string() +
                                         ", beta = " + beta.to_string());
        }
    }
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() != 6 * q * (q - 1))
        throw construction_error("explicit point count " + std::to_string(points.size()) +
                                 " differs from 6q(q-1) = " + std::to_string(6 * q * (q - 1)));
    return points;
}

unsigned long LegendreParams::d() const {
    unsigned long out = 1;
    for (unsigned long i = 0; i < f; ++i) out *= p;
    return out + 1;
}

void LegendreParams::validate() const {
    if (!is_prime(p) || p == 2)
        throw invalid_family_error("Legendre family requires an odd prime p, got p = " + std::to_string(p));
    if (f == 0) throw invalid_family_error("Legendre family requires f >= 1");
}

WeierstrassCurve legendre_curve(const FieldCtx& ctx, const LegendreParams& params) {
    params.validate();
    if (ctx.p != params.p || ctx.s != params.base_field_degree())
        throw internal_error("field context does not match Legendre parameters (need GF(p^(2f)))");
    unsigned long d = params.d();
    Poly ud = Poly::monomial(ctx, FieldElement::from_int(ctx, 1), d);
    Poly zero(ctx);
    // y^2 = x(x+1)(x+u^d) = x^3 + (1+u^d) x^2 + u^d x
    return WeierstrassCurve(zero, Poly::constant(ctx, 1) + ud, zero, ud, zero);
}

FieldElement legendre_zeta(const FieldCtx& ctx, const LegendreParams& params) {
    params.validate();
    unsigned long d = params.d();
    if ((ctx.r - 1) % d != 0) throw internal_error("mu_d not contained in the base field");
    FieldElement g = primitive_root(ctx);
    FieldElement zeta = g.pow((ctx.r - 1) / d);
    if (element_order(zeta) != d) throw internal_error("zeta does not have exact order d");
    return zeta;
}

std::vector<CurvePoint> legendre_explicit_points(const FieldCtx& ctx, const LegendreParams& params) {
    WeierstrassCurve E = legendre_curve(ctx, params);
    unsigned long d = params.d();
    FieldElement zeta = legendre_zeta(ctx, params);
    Poly u = Poly::variable(ctx);
    Poly one = Poly::constant(ctx, 1);
    std::vector<CurvePoint> out;
    out.reserve(d);
    FieldElement zi = FieldElement::from_int(ctx, 1);
    for (unsigned long i = 0; i < d; ++i) {
        Poly ziu = u * zi;
        Poly x = ziu;
        Poly y = ziu * (ziu + one).pow(d / 2);
        CurvePoint P{RationalFunction(x), RationalFunction(y)};
        if (!on_curve(E, P))
            throw construction_error("Legendre point P_" + std::to_string(i) + " fails on-curve check");
        out.push_back(std::move(P));
        zi = zi * zeta;
    }
    return out;
}

} // namespace mwlat
