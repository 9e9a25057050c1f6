// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/field.hpp"

#include "mwlat/errors.hpp"

#include "doctest.h"

using namespace mwlat;

TEST_CASE("prime field GF(5) uses the degenerate modulus t") {
    Field f = make_field(5, 1);
    CHECK(f->r == 5);
    CHECK(f->modulus == std::vector<std::uint32_t>{0, 1});
    FieldElement a = FieldElement::from_int(*f, 3);
    FieldElement b = FieldElement::from_int(*f, 4);
    CHECK((a * b).to_integer() == 2);
    CHECK((a + b).to_integer() == 2);
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(make_field(6, 2), invalid_family_error);
    CHECK_THROWS_AS(make_field(5, 0), invalid_family_error);
}

TEST_CASE("GF(5^4) has 625 elements and deterministic construction") {
    Field f1 = make_field(5, 4);
    Field f2 = make_field(5, 4);
    CHECK(f1->r == 625);
    CHECK(f1->modulus == f2->modulus);
    CHECK(f1->xpow == f2->xpow);
}

TEST_CASE("GF(3^4): every unit satisfies a^80 = 1, exhaustively") {
    Field f = make_field(3, 4);
    CHECK(f->r == 81);
    for (BigInt enc = 1; enc < 81; ++enc) {
        FieldElement a = FieldElement::from_integer(*f, enc);
        CHECK(a.pow(80).is_one());
        CHECK((a * a.inverse()).is_one());
        CHECK(a.pow(81) == a); // Frobenius fixed point of x -> x^r
    }
}

TEST_CASE("Frobenius is additive and multiplicative") {
    Field f = make_field(5, 4);
    for (BigInt enc = 7; enc < 625; enc += 101) {
        FieldElement a = FieldElement::from_integer(*f, enc);
        FieldElement b = FieldElement::from_integer(*f, (enc * 3 + 11) % 625);
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
}

TEST_CASE("integer encoding round-trips") {
    Field f = make_field(7, 3);
    for (BigInt enc = 0; enc < 343; enc += 13) {
        CHECK(FieldElement::from_integer(*f, enc).to_integer() == enc);
    }
}

TEST_CASE("sufficiency conditions of the E1 family") {
    CHECK(is_sufficiently_large(5, 1, 4));   // 8 | 24, 12 | 624
    CHECK(!is_sufficiently_large(5, 1, 1));  // 8 does not divide 6
    CHECK(is_sufficiently_large(11, 1, 2));  // 8 | 24, 30 | 120
    CHECK(check_sufficiently_large(5, 1, 1).failed_condition() == "8 | (p+1)s");
    CHECK_THROWS_AS(check_sufficiently_large(7, 1, 4), invalid_family_error);  // 7 = 1 mod 6
    CHECK_THROWS_AS(check_sufficiently_large(3, 1, 4), invalid_family_error);  // p <= 3
    CHECK_THROWS_AS(check_sufficiently_large(5, 2, 4), invalid_family_error);  // even c
    CHECK_THROWS_AS(check_sufficiently_large(9, 1, 4), invalid_family_error);  // composite
}

TEST_CASE("minimal sufficient s by exhaustive search") {
    CHECK(min_sufficient_s(5, 1) == 4);
    CHECK(min_sufficient_s(11, 1) == 2);
    CHECK(min_sufficient_s(17, 1) == 4);
    for (unsigned long s = 1; s < min_sufficient_s(17, 1); ++s) CHECK(!is_sufficiently_large(17, 1, s));
}

TEST_CASE("solve_sigma matches brute force over GF(5^4)") {
    Field f = make_field(5, 4);
    auto sigmas = solve_sigma(*f, 5);
    CHECK(sigmas.size() == 24); // 6(q-1)
    FieldElement minus_one = -FieldElement::from_int(*f, 1);
    std::vector<BigInt> expected;
    for (BigInt enc = 1; enc < 625; ++enc) {
        FieldElement a = FieldElement::from_integer(*f, enc);
        if (a.pow(24) == minus_one) expected.push_back(enc);
    }
    CHECK(expected.size() == 24);
    REQUIRE(sigmas.size() == expected.size());
    for (size_t i = 0; i < sigmas.size(); ++i) {
        CHECK(sigmas[i].to_integer() == expected[i]);
        CHECK(sigmas[i].pow(48).is_one()); // squaring the defining relation
    }
}

TEST_CASE("solve_sigma matches brute force over GF(11^2)") {
    Field f = make_field(11, 2);
    auto sigmas = solve_sigma(*f, 11);
    CHECK(sigmas.size() == 60);
    FieldElement minus_one = -FieldElement::from_int(*f, 1);
    size_t count = 0;
    for (BigInt enc = 1; enc < 121; ++enc)
        if (FieldElement::from_integer(*f, enc).pow(60) == minus_one) ++count;
    CHECK(count == 60);
}

TEST_CASE("solve_sigma reports insufficient fields") {
    Field f = make_field(5, 2); // r - 1 = 24, 12(q-1) = 48 does not divide
    CHECK_THROWS_AS(solve_sigma(*f, 5), no_solution_error);
}

TEST_CASE("solve_beta matches brute force over GF(5^4)") {
    Field f = make_field(5, 4);
    auto betas = solve_beta(*f, 5);
    CHECK(betas.size() == 5); // exactly q solutions
    FieldElement one = FieldElement::from_int(*f, 1);
    std::vector<BigInt> expected;
    for (BigInt enc = 0; enc < 625; ++enc) {
        FieldElement b = FieldElement::from_integer(*f, enc);
        if (b.pow(5) + b == one) expected.push_back(enc);
    }
    REQUIRE(betas.size() == expected.size());
    for (size_t i = 0; i < betas.size(); ++i) CHECK(betas[i].to_integer() == expected[i]);
}

TEST_CASE("solve_beta solution count equals q for GF(11^2)") {
    Field f = make_field(11, 2);
    auto betas = solve_beta(*f, 11);
    CHECK(betas.size() == 11);
    FieldElement one = FieldElement::from_int(*f, 1);
    for (const auto& b : betas) CHECK(b.pow(11) + b == one);
}

TEST_CASE("primitive root has full order") {
    Field f = make_field(11, 2);
    FieldElement g = primitive_root(*f);
    CHECK(element_order(g) == 120);
}
