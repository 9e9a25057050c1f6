// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/bounds.hpp"

#include "mwlat/errors.hpp"

#include "doctest.h"

using namespace mwlat;

TEST_CASE("analytic bound: q = 5 rows are exactly 1/16 for any sufficient s") {
    for (unsigned long s : {4ul, 8ul, 12ul}) {
        RadicalValue v = prop47_bound(5, 1, s);
        REQUIRE(v.is_rational()); // floor(5/6) = 0: no r factor at all
        CHECK(*v.as_rational() == Rational(1, 16));
    }
}

TEST_CASE("analytic bound: q = 11") {
    RadicalValue r2 = prop47_bound(11, 1, 2);
    REQUIRE(r2.is_rational());
    CHECK(*r2.as_rational() == Rational(1, 11)); // ((12)/12)^10 / 11^(2/2)
    RadicalValue r6 = prop47_bound(11, 1, 6);
    REQUIRE(r6.is_rational());
    CHECK(*r6.as_rational() == Rational(1, 1331));
    CHECK(r6.to_double() == doctest::Approx(0.000751).epsilon(1e-3));
}

TEST_CASE("analytic bound: q = 17, r = 17^4") {
    RadicalValue v = prop47_bound(17, 1, 4);
    REQUIRE(v.is_rational()); // floor(17/6) = 2, s = 4: even exponent
    Rational expected = pow_rational(Rational(3, 2), 16) / pow_rational(Rational(17), 4);
    CHECK(*v.as_rational() == expected);
    CHECK(v.to_double() == doctest::Approx(0.007864).epsilon(1e-3));
}

TEST_CASE("analytic bound picks up sqrt(p) for odd exponents") {
    // q = 11, s = 3 is not sufficient (c | s and divisibilities fail), so
    // exercise the radical path via q = 17, s = 8? e = 16 even again.
    // p = 23, c = 1, s = ? floor(23/6) = 3, odd s * 3 odd requires odd s.
    // min sufficient s for p = 23: 8 | 24s -> s mult of ... (p+1)s = 24s,
    // 8 | 24s always; ord of 23 mod 3*22 = 66: 23^s = 1 mod 66 -> s even.
    // So sufficient s is even here; the sqrt(p) branch needs s*floor(q/6)
    // odd, which the sufficiency conditions can indeed produce: p = 29,
    // floor(29/6) = 4 even -> rational. Keep the branch tested at unit
    // level through RadicalValue instead.
    RadicalValue v(Rational(1, 2), Rational(1, 5)); // (1/2) / sqrt(5)
    CHECK(!v.is_rational());
    CHECK(v.squared() == Rational(1, 20));
}

TEST_CASE("sha lower bound") {
    RadicalValue computed(Rational(1, 16));
    RadicalValue analytic(Rational(1, 16));
    CHECK(sha_lower_bound(computed, analytic) == 1);

    // q = 17 shape: ratio 289 -> sha >= 83521
    RadicalValue c17(pow_rational(Rational(3, 2), 16) / Rational(289));
    RadicalValue a17(pow_rational(Rational(3, 2), 16) / Rational(83521));
    CHECK(sha_lower_bound(c17, a17) == Rational(83521));
    CHECK(sha_lower_bound(c17, a17) > 1);
    CHECK_THROWS(sha_lower_bound(RadicalValue(Rational(0)), analytic));
}

TEST_CASE("prop47 respects preconditions") {
    CHECK_THROWS_AS(prop47_bound(5, 1, 1), invalid_family_error);
    CHECK_THROWS_AS(prop47_bound(7, 1, 4), invalid_family_error);
    CHECK_THROWS_AS(prop47_bound(5, 1, 4, 0), invalid_family_error);
}

TEST_CASE("table1 row q = 5, s = 4: the E8 case") {
    Table1Row row = table1_row(5, 1, 4);
    CHECK(row.q == 5);
    CHECK(row.r == 625);
    CHECK(row.dimension == 8);
    CHECK(row.nmin == 2);
    CHECK(row.lattice_det == 1);
    CHECK(*row.delta_computed.as_rational() == Rational(1, 16));
    CHECK(*row.delta_analytic.as_rational() == Rational(1, 16));
    CHECK(row.sha_lower == 1);
    CHECK(!row.sha_nontrivial);
    REQUIRE(row.e8.has_value());
    CHECK(*row.e8);
    REQUIRE(row.min_norm_found.has_value());
    CHECK(*row.min_norm_found == 2); // the analytic floor is attained
    CHECK(row.best_known == doctest::Approx(0.0625));
    CHECK(row.density == doctest::Approx(0.253670).epsilon(1e-5));
}

TEST_CASE("table1 rejects insufficient parameters with the failing condition") {
    CHECK_THROWS_WITH_AS(table1_row(5, 1, 1), doctest::Contains("8 | (p+1)s"), invalid_family_error);
}

TEST_CASE("legendre gram matches the closed form") {
    GramMatrix g = legendre_gram(4);
    CHECK(g.n_gen() == 4);
    CHECK(g.entries[0][0] == Rational(3, 4));
    CHECK(g.entries[0][2] == Rational(-3, 4));
    CHECK(g.entries[0][1] == 0);
}

TEST_CASE("table2 row p = 3, f = 1") {
    Table2Row row = table2_row(3, 1);
    CHECK(row.d == 4);
    CHECK(row.dimension == 2);
    CHECK(row.nmin_bound == Rational(3, 8));
    CHECK(row.lattice_det == Rational(9, 16));
    CHECK(*row.delta_bound.as_rational() == Rational(1, 8));
    REQUIRE(row.enumerated_min_norm.has_value());
    CHECK(*row.enumerated_min_norm == Rational(3, 4)); // exceeds the (d-1)/2d bound
    CHECK(row.best_known == doctest::Approx(0.288));
}

TEST_CASE("table2 row p = 5, f = 1 gives exactly 1/192") {
    Table2Row row = table2_row(5, 1);
    CHECK(row.dimension == 4);
    CHECK(*row.delta_bound.as_rational() == Rational(1, 192));
    CHECK(row.delta_bound.to_double() == doctest::Approx(0.005208).epsilon(1e-3));
}

TEST_CASE("table2 density decreases across the published rows") {
    const std::pair<unsigned long, unsigned long> rows[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}};
    // ordered by p^f: 3, 5, 7, 9, 25, 27
    double prev = 1e9;
    for (auto [p, f] : rows) {
        Table2Row row = table2_row(p, f);
        double v = row.delta_bound.to_double();
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("best known density literals") {
    CHECK(best_known_normalized_density(8) == doctest::Approx(0.0625));
    CHECK(!best_known_normalized_density(9).has_value());
}
