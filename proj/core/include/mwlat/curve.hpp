// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/funcring.hpp"

#include <optional>
#include <vector>

namespace mwlat {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with polynomial coefficients over F_r[t]. The long form is used
/// universally so the Legendre family works in characteristic 3.
class WeierstrassCurve {
public:
    WeierstrassCurve(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6);

    const FieldCtx& ctx() const { return a1_.ctx(); }
    const Poly& a1() const { return a1_; }
    const Poly& a2() const { return a2_; }
    const Poly& a3() const { return a3_; }
    const Poly& a4() const { return a4_; }
    const Poly& a6() const { return a6_; }

    Poly discriminant() const;
    bool is_short_form() const; // a1 = a2 = a3 = 0

private:
    Poly a1_, a2_, a3_, a4_, a6_;
};

/// Projective point: the identity [0:1:0] or an affine pair of rational
/// functions.
class CurvePoint {
public:
    static CurvePoint identity();
    CurvePoint(RationalFunction x, RationalFunction y);

    bool is_identity() const { return !coords_.has_value(); }
    const RationalFunction& x() const;
    const RationalFunction& y() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

private:
    CurvePoint() = default;
    std::optional<std::pair<RationalFunction, RationalFunction>> coords_;
};

/// Deterministic total order on points (identity first, then coordinate
/// coefficient encodings); used for dedup and stable output.
bool point_less(const CurvePoint& a, const CurvePoint& b);

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P);

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint dbl(const WeierstrassCurve& E, const CurvePoint& P);
/// Double-and-add; heights grow quadratically, so |n| is capped at 8.
CurvePoint mul_scalar(const WeierstrassCurve& E, long n, const CurvePoint& P);

/// Parameters of the family y^2 = x^3 + t^q - t with q = p^c over
/// F_r(t), r = p^s.
struct CurveE1Params {
    unsigned long p = 0;
    unsigned long c = 0;
    unsigned long s = 0;
    unsigned long q() const;
    /// Throws invalid_family_error when the family conditions or the
    /// sufficiency test fail.
    void validate() const;
};

WeierstrassCurve e1_curve(const FieldCtx& ctx, const CurveE1Params& params);

/// sigma and beta solution sets feeding the explicit point construction.
struct ExplicitSeedSet {
    std::vector<FieldElement> sigmas; // 6(q-1) of them
    std::vector<FieldElement> betas;  // q of them
};
ExplicitSeedSet make_seed_set(const FieldCtx& ctx, const CurveE1Params& params);

/// The 6q(q-1) explicit points on the E1 family, deduplicated and sorted.
/// Every emitted point is verified on the curve; a (sigma, beta) pair
/// yielding no on-curve candidate raises construction_error.
std::vector<CurvePoint> e1_explicit_points(const FieldCtx& ctx, const CurveE1Params& params,
                                           const ExplicitSeedSet& seeds);

/// Parameters of the Legendre family y^2 = x(x+1)(x+t) pulled back along
/// t = u^d, d = p^f + 1, over GF(p^(2f))(u).
struct LegendreParams {
    unsigned long p = 0;
    unsigned long f = 0;
    unsigned long d() const;
    unsigned long base_field_degree() const { return 2 * f; } // smallest with mu_d
    void validate() const;
};

WeierstrassCurve legendre_curve(const FieldCtx& ctx, const LegendreParams& params);

/// Deterministic primitive d-th root of unity in GF(p^(2f)).
FieldElement legendre_zeta(const FieldCtx& ctx, const LegendreParams& params);

/// The d points P_i = (zeta^i u, zeta^i u (zeta^i u + 1)^(d/2)) in index
/// order; all verified on the curve.
std::vector<CurvePoint> legendre_explicit_points(const FieldCtx& ctx, const LegendreParams& params);

} // namespace mwlat
