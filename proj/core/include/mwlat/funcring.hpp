// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/field.hpp"

#include <utility>
#include <vector>

namespace mwlat {

/// Dense polynomial in t over a FieldCtx. Trailing zeros are trimmed; the
/// zero polynomial has an empty coefficient vector and no degree (asking for
/// one throws instead of returning a -1 that could silently enter
/// arithmetic).
class Poly {
public:
    Poly() = default;
    explicit Poly(const FieldCtx& ctx) : ctx_(&ctx) {}

    static Poly constant(const FieldCtx& ctx, const FieldElement& c);
    static Poly constant(const FieldCtx& ctx, long c);
    static Poly variable(const FieldCtx& ctx); // t
    static Poly monomial(const FieldCtx& ctx, const FieldElement& c, size_t deg);
    static Poly from_coeffs(const FieldCtx& ctx, std::vector<FieldElement> coeffs);
    /// t^q - t
    static Poly tq_minus_t(const FieldCtx& ctx, unsigned long q);

    const FieldCtx& ctx() const;
    bool attached() const { return ctx_ != nullptr; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree of a nonzero polynomial; throws on zero.
    int degree() const;
    FieldElement coeff(size_t i) const;
    const FieldElement& leading() const;
    bool is_monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact Euclidean division: returns (quotient, remainder).
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    Poly operator/(const Poly& o) const { return divrem(o).first; }
    Poly operator%(const Poly& o) const { return divrem(o).second; }

    Poly pow(unsigned long e) const;
    Poly derivative() const;
    FieldElement evaluate(const FieldElement& x) const;
    Poly monic() const;

    /// Multiplicity of the root alpha, by repeated exact division by
    /// (t - alpha). Zero when alpha is not a root; throws on the zero
    /// polynomial.
    long root_multiplicity(const FieldElement& alpha) const;

    const std::vector<FieldElement>& coefficients() const { return c_; }

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<FieldElement> c_;
    void trim();
};

/// Monic gcd of two polynomials (not both zero).
Poly gcd(const Poly& a, const Poly& b);

/// Quotient f/g of coprime polynomials with monic denominator; every
/// constructor and operation restores this canonical form.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(const FieldCtx& ctx); // zero
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(const Poly& num);

    static RationalFunction constant(const FieldCtx& ctx, long c);
    static RationalFunction variable(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return num_.ctx(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    Poly num_, den_;
    void canonicalize();
};

/// Order of vanishing at the finite place t = alpha; negative at poles.
/// Throws on the zero function.
long ord_at(const RationalFunction& x, const FieldElement& alpha);

/// Order of vanishing at infinity: deg(den) - deg(num). Throws on zero.
long ord_infinity(const RationalFunction& x);

/// max(deg num, deg den); the naive height of a point with this
/// x-coordinate. Constants (including 0) have degree 0.
long naive_degree(const RationalFunction& x);

} // namespace mwlat
