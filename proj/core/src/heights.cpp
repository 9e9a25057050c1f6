// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/heights.hpp"

#include "mwlat/errors.hpp"

namespace mwlat {

Rational naive_height(const CurvePoint& P) {
    if (P.is_identity()) return 0;
    return Rational(naive_degree(P.x()));
}

namespace {

// q of an E1-shaped curve (a1 = a2 = a3 = a4 = 0, a6 = t^q - t), or throw.
unsigned long e1_q_of(const WeierstrassCurve& E) {
    if (!E.is_short_form() || !E.a4().is_zero() || E.a6().is_zero())
        throw invalid_family_error("curve is not of the form y^2 = x^3 + t^q - t");
    const Poly& a6 = E.a6();
    int q = a6.degree();
    if (q < 5 || a6 != Poly::tq_minus_t(E.ctx(), static_cast<unsigned long>(q)))
        throw invalid_family_error("curve is not of the form y^2 = x^3 + t^q - t");
    return static_cast<unsigned long>(q);
}

} // namespace

Rational canonical_height_e1(const WeierstrassCurve& E, const CurvePoint& P) {
    e1_q_of(E);
    return naive_height(P);
}

Rational pairing(const WeierstrassCurve& E, const HeightFn& h, const CurvePoint& P, const CurvePoint& Q) {
    Rational v = h(add(E, P, Q)) - h(P) - h(Q);
    return v / 2;
}

namespace {

Rational fraction(long num, unsigned long den) {
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace

Rational legendre_pairing(unsigned long i, unsigned long j, unsigned long d) {
    if (i >= d || j >= d) throw internal_error("legendre_pairing index out of range");
    if (i == j) return fraction(static_cast<long>((d - 1) * (d - 2)), 2 * d);
    unsigned long diff = i > j ? i - j : j - i;
    if (diff % 2 == 0) return fraction(1 - static_cast<long>(d), d);
    return 0;
}

Rational legendre_min_norm_bound(unsigned long d) { return fraction(static_cast<long>(d - 1), 2 * d); }

Rational e1_min_norm(unsigned long q) {
    if ((q + 1) % 3 != 0)
        throw invalid_family_error("q = " + std::to_string(q) + " is not -1 mod 3; (q+1)/3 not integral");
    return Rational((q + 1) / 3);
}

namespace {

bool is_squarefree(const Poly& g) {
    if (g.is_constant()) return true;
    Poly gp = g.derivative();
    if (gp.is_zero()) return false; // nonconstant p-th power
    return gcd(g, gp).is_constant();
}

} // namespace

NiceCurveProfile nice_check(const Poly& a4, const Poly& a6) {
    const FieldCtx& f = a4.ctx();
    if (f.p <= 3) throw invalid_family_error("nice-curve analysis requires characteristic > 3");
    NiceCurveProfile out;
    out.a4 = a4;
    out.a6 = a6;
    auto k = [&](long v) { return Poly::constant(f, v); };
    out.disc = k(-16) * (k(4) * a4 * a4 * a4 + k(27) * a6 * a6);
    if (out.disc.is_zero()) throw construction_error("singular model: zero discriminant");
    long d = 0;
    if (!a4.is_zero()) d = std::max(d, static_cast<long>((a4.degree() + 3) / 4));
    if (!a6.is_zero()) d = std::max(d, static_cast<long>((a6.degree() + 5) / 6));
    out.d = d;
    out.chi = d;
    Poly disc_m = out.disc.monic();
    out.double_locus = k(1);
    if (disc_m.is_constant()) {
        out.cond1 = true;
        out.cond2 = true;
    } else {
        Poly dp = disc_m.derivative();
        if (dp.is_zero()) {
            // disc is a p-th power: multiplicities >= p > 2
            out.cond1 = false;
            out.cond2 = true; // no certified double roots to test
        } else {
            Poly g1 = gcd(disc_m, dp);
            out.cond1 = is_squarefree(g1);
            if (out.cond1) out.double_locus = g1;
            if (g1.is_constant()) {
                out.cond2 = true; // no double roots at all
            } else if (out.cond1) {
                // additive at every place of the locus iff g1 | a4
                out.cond2 = a4.is_zero() || (!a4.is_zero() && (a4 % g1).is_zero());
            } else {
                out.cond2 = false;
            }
        }
    }
    // informational report at t = infinity for the transformed model
    out.inf_disc_multiplicity = 12 * d - out.disc.degree();
    out.inf_additive = a4.is_zero() || a4.degree() < 4 * d;
    return out;
}

Rational nice_height(const NiceCurveProfile& profile, const CurvePoint& P) {
    if (P.is_identity()) throw internal_error("nice_height of the identity point");
    if (!profile.nice()) throw not_nice_error("height formula requires a nice curve");
    const RationalFunction& x = P.x();
    long deg_f = x.num().is_zero() ? 0 : x.num().degree();
    long deg_g = x.den().degree();
    long twod = 2 * profile.d;
    return Rational(twod + deg_g + std::max(0l, deg_f - deg_g - twod));
}

bool nice_height_large_regime(const NiceCurveProfile& profile, const CurvePoint& P) {
    if (P.is_identity()) return false;
    const RationalFunction& x = P.x();
    long deg_f = x.num().is_zero() ? 0 : x.num().degree();
    return deg_f >= x.den().degree() + 2 * profile.d;
}

} // namespace mwlat
