// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/funcring.hpp"

#include "mwlat/errors.hpp"

#include "doctest.h"

#include <random>

using namespace mwlat;

namespace {

Poly random_poly(const FieldCtx& f, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(f.r.get_ui()) - 1);
    std::vector<FieldElement> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(FieldElement::from_integer(f, dist(rng)));
    cs.push_back(FieldElement::from_int(f, 1)); // keep the degree exact
    return Poly::from_coeffs(f, std::move(cs));
}

} // namespace

TEST_CASE("gcd of t^2-1 and t-1 over GF(5)") {
    Field f = make_field(5, 1);
    Poly t = Poly::variable(*f);
    Poly one = Poly::constant(*f, 1);
    Poly g = gcd(t * t - one, t - one);
    CHECK(g == t - one);
}

TEST_CASE("t^q - t vanishes exactly on GF(q) inside GF(r)") {
    Field f = make_field(5, 4);
    Poly tq = Poly::tq_minus_t(*f, 5);
    size_t roots = 0;
    for (BigInt enc = 0; enc < 625; ++enc) {
        FieldElement alpha = FieldElement::from_integer(*f, enc);
        bool in_subfield = alpha.pow(5) == alpha;
        bool vanishes = tq.evaluate(alpha).is_zero();
        CHECK(in_subfield == vanishes);
        if (vanishes) ++roots;
    }
    CHECK(roots == 5);
}

TEST_CASE("derivative of t^5 over GF(5) is zero") {
    Field f = make_field(5, 1);
    Poly t5 = Poly::monomial(*f, FieldElement::from_int(*f, 1), 5);
    CHECK(t5.derivative().is_zero());
}

TEST_CASE("divrem is exact Euclidean division") {
    Field f = make_field(7, 2);
    std::mt19937 rng(42);
    for (int iter = 0; iter < 25; ++iter) {
        Poly a = random_poly(*f, 8, rng);
        Poly b = random_poly(*f, 3, rng);
        auto [q, r] = a.divrem(b);
        CHECK(a == q * b + r);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("degree of the zero polynomial is an error, not -1") {
    Field f = make_field(5, 1);
    Poly zero(*f);
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.degree(), internal_error);
    CHECK_THROWS_AS(Poly::constant(*f, 1).divrem(zero), internal_error);
}

TEST_CASE("deg(fg) = deg f + deg g") {
    Field f = make_field(5, 2);
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        Poly a = random_poly(*f, 5, rng);
        Poly b = random_poly(*f, 4, rng);
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("canonical form: gcd 1, monic denominator, idempotent") {
    Field f = make_field(5, 1);
    Poly t = Poly::variable(*f);
    Poly num = (t - Poly::constant(*f, 1)) * (t - Poly::constant(*f, 2)) * Poly::constant(*f, 3);
    Poly den = (t - Poly::constant(*f, 1)) * Poly::constant(*f, 2);
    RationalFunction x(num, den);
    CHECK(x.den().is_monic());
    CHECK(gcd(x.num(), x.den()).is_constant());
    RationalFunction y(x.num(), x.den()); // canonicalize again
    CHECK(x == y);
}

TEST_CASE("ord_at matches the stated examples") {
    Field f = make_field(5, 4);
    // ord_alpha(t^q - t) = 1 for alpha in GF(q)
    RationalFunction tq{Poly::tq_minus_t(*f, 5)};
    for (BigInt enc = 0; enc < 625; ++enc) {
        FieldElement alpha = FieldElement::from_integer(*f, enc);
        if (alpha.pow(5) == alpha) CHECK(ord_at(tq, alpha) == 1);
    }
    // ord_alpha((t-alpha)^3 / (t-alpha)) = 2
    FieldElement alpha = FieldElement::from_integer(*f, 17);
    Poly lin = Poly::variable(*f) - Poly::constant(*f, alpha);
    RationalFunction x(lin.pow(3), lin);
    CHECK(ord_at(x, alpha) == 2);
}

TEST_CASE("ord_at of a product is the sum of ord_at") {
    Field f = make_field(5, 2);
    std::mt19937 rng(11);
    FieldElement alpha = FieldElement::from_integer(*f, 7);
    Poly lin = Poly::variable(*f) - Poly::constant(*f, alpha);
    for (int iter = 0; iter < 10; ++iter) {
        int m1 = static_cast<int>(rng() % 4);
        int m2 = static_cast<int>(rng() % 4);
        Poly extra1 = random_poly(*f, 2, rng);
        Poly extra2 = random_poly(*f, 2, rng);
        if (extra1.evaluate(alpha).is_zero() || extra2.evaluate(alpha).is_zero()) continue;
        RationalFunction a(lin.pow(m1) * extra1, Poly::constant(*f, 1));
        RationalFunction b(lin.pow(m2) * extra2, Poly::constant(*f, 1));
        CHECK(ord_at(a * b, alpha) == ord_at(a, alpha) + ord_at(b, alpha));
    }
}

TEST_CASE("orders at infinity") {
    Field f = make_field(5, 1);
    RationalFunction t = RationalFunction::variable(*f);
    CHECK(ord_infinity(t) == -1);
    CHECK(ord_infinity(t * t * t * t * t) == -5); // t^q at q = 5
    RationalFunction inv_t2 = RationalFunction::constant(*f, 1) / (t * t);
    CHECK(ord_infinity(inv_t2) == 2);
    RationalFunction prod = t * inv_t2;
    CHECK(ord_infinity(prod) == ord_infinity(t) + ord_infinity(inv_t2));
}

TEST_CASE("strict non-archimedean triangle equality") {
    Field f = make_field(5, 2);
    std::mt19937 rng(13);
    FieldElement alpha = FieldElement::from_integer(*f, 3);
    Poly lin = Poly::variable(*f) - Poly::constant(*f, alpha);
    for (int iter = 0; iter < 20; ++iter) {
        long m1 = static_cast<long>(rng() % 5);
        long m2 = static_cast<long>(rng() % 5);
        if (m1 == m2) continue;
        Poly u1 = random_poly(*f, 1, rng);
        Poly u2 = random_poly(*f, 1, rng);
        if (u1.evaluate(alpha).is_zero() || u2.evaluate(alpha).is_zero()) continue;
        RationalFunction a(lin.pow(m1) * u1, Poly::constant(*f, 1));
        RationalFunction b(lin.pow(m2) * u2, Poly::constant(*f, 1));
        // finite place
        CHECK(ord_at(a + b, alpha) == std::min(ord_at(a, alpha), ord_at(b, alpha)));
        // infinite place: distinct degrees give distinct orders
        if (ord_infinity(a) != ord_infinity(b))
            CHECK(ord_infinity(a + b) == std::min(ord_infinity(a), ord_infinity(b)));
    }
}

TEST_CASE("naive degree of x-coordinates") {
    Field f = make_field(5, 1);
    Poly t = Poly::variable(*f);
    RationalFunction x(t.pow(3), t + Poly::constant(*f, 1));
    CHECK(naive_degree(x) == 3);
    CHECK(naive_degree(RationalFunction::constant(*f, 3)) == 0);
    CHECK(naive_degree(RationalFunction(*f)) == 0); // x = 0
}
