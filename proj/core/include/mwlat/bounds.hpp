// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/heights.hpp"
#include "mwlat/lattice.hpp"

#include <optional>

namespace mwlat {

/// Analytic lower bound on the normalized center density of the E1 family:
/// sqrt(sha_lower) * r^(-floor(q/6)/2) * ((q+1)/12)^(q-1), exact as a
/// radical value (the r power contributes sqrt(p) when s*floor(q/6) is odd).
RadicalValue prop47_bound(unsigned long p, unsigned long c, unsigned long s,
                          const BigInt& sha_lower = 1);

/// (delta_computed / delta_analytic)^2, an exact rational lower bound on
/// |Sha|; nontrivial iff it exceeds 1.
Rational sha_lower_bound(const RadicalValue& delta_computed, const RadicalValue& delta_analytic);

/// Best known normalized center density in a given dimension, where the
/// published tables list one; stored literals, never recomputed.
std::optional<double> best_known_normalized_density(long dimension);

/// Full pipeline result for one row of the E1 density table.
struct Table1Row {
    unsigned long p = 0, c = 0, s = 0;
    unsigned long q = 0;
    BigInt r;
    long dimension = 0; // 2(q-1)
    Rational nmin;      // (q+1)/3
    Rational lattice_det;
    RadicalValue delta_computed;
    RadicalValue delta_analytic;
    Rational sha_lower;
    bool sha_nontrivial = false;
    std::optional<double> best_known;
    std::optional<bool> e8;                 // rank 8 only
    std::optional<Rational> min_norm_found; // rank <= 12 only, by enumeration
    double density = 0.0;
    double seconds = 0.0;
};

struct Table1Options {
    unsigned threads = 0;     // 0 = hardware concurrency
    bool check_e8 = true;     // run the E8 test at rank 8
    bool enumerate = true;    // enumerate shortest vector at rank <= 12
};

/// seeds -> explicit points -> Gram by canonical-height pairings ->
/// saturation -> density; asserts the saturated rank equals 2(q-1).
Table1Row table1_row(unsigned long p, unsigned long c, unsigned long s,
                     const Table1Options& opts = {});

/// Gram matrix of the d Legendre points from the closed-form pairing.
GramMatrix legendre_gram(unsigned long d);

/// One row of the Legendre density table.
struct Table2Row {
    unsigned long p = 0, f = 0;
    unsigned long d = 0;
    long dimension = 0; // d - 2
    Rational nmin_bound; // (d-1)/(2d), the value the density uses
    Rational lattice_det;
    RadicalValue delta_bound;
    /// True minimum norm by enumeration when the rank permits; exceeds
    /// nmin_bound (the table deliberately uses the bound).
    std::optional<Rational> enumerated_min_norm;
    std::optional<double> best_known;
    double density = 0.0;
    double seconds = 0.0;
};

/// Closed-form Gram -> saturation -> density with the minimum-norm bound;
/// asserts the saturated rank equals d - 2.
Table2Row table2_row(unsigned long p, unsigned long f);

} // namespace mwlat
