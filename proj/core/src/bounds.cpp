// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/bounds.hpp"

#include "mwlat/errors.hpp"

#include <chrono>

namespace mwlat {

RadicalValue prop47_bound(unsigned long p, unsigned long c, unsigned long s, const BigInt& sha_lower) {
    CurveE1Params params{p, c, s};
    params.validate();
    if (sha_lower < 1) throw invalid_family_error("sha lower bound must be >= 1");
    unsigned long q = params.q();
    Rational base(q + 1, 12);
    base.canonicalize();
    Rational rational_part = pow_rational(base, static_cast<long>(q) - 1);
    unsigned long e = s * (q / 6); // r^(q/6 floor) = p^e
    rational_part /= pow_rational(Rational(p), static_cast<long>(e / 2));
    Rational radicand(sha_lower);
    if (e % 2 != 0) radicand /= p;
    return RadicalValue(rational_part, radicand);
}

Rational sha_lower_bound(const RadicalValue& delta_computed, const RadicalValue& delta_analytic) {
    if (delta_computed.rational_part() <= 0 || delta_analytic.rational_part() <= 0)
        throw invalid_family_error("sha_lower_bound requires positive density bounds");
    return delta_computed.squared() / delta_analytic.squared();
}

std::optional<double> best_known_normalized_density(long dimension) {
    switch (dimension) {
        case 2: return 0.288;   // hexagonal
        case 4: return 0.125;   // D4
        case 6: return 0.0721;  // E6
        case 8: return 0.0625;  // E8
        case 20: return 0.1315;
        case 24: return 1.003;  // Leech
        case 26: return 0.577;
        case 32: return 2.565;
        default: return std::nullopt;
    }
}

Table1Row table1_row(unsigned long p, unsigned long c, unsigned long s, const Table1Options& opts) {
    auto start = std::chrono::steady_clock::now();
    CurveE1Params params{p, c, s};
    params.validate();
    unsigned long q = params.q();

    Table1Row row;
    row.p = p;
    row.c = c;
    row.s = s;
    row.q = q;
    row.r = pow_bigint(BigInt(p), s);
    row.dimension = 2 * (static_cast<long>(q) - 1);
    row.nmin = e1_min_norm(q);

    Field field = make_field(p, s);
    WeierstrassCurve E = e1_curve(*field, params);
    ExplicitSeedSet seeds = make_seed_set(*field, params);
    std::vector<CurvePoint> points = e1_explicit_points(*field, params, seeds);

    auto height = [&E](const CurvePoint& P) { return canonical_height_e1(E, P); };
    auto pair = [&](const CurvePoint& P, const CurvePoint& Q) { return pairing(E, height, P, Q); };
    auto negate = [&E](const CurvePoint& P) { return neg(E, P); };
    GramMatrix gram = gram_from_points(points, pair, negate, opts.threads);

    LatticeBasis basis = saturate(gram);
    if (basis.rank != static_cast<size_t>(row.dimension))
        throw rank_deficiency_error("explicit points span rank " + std::to_string(basis.rank) +
                                    ", expected 2(q-1) = " + std::to_string(row.dimension));
    row.lattice_det = basis.det;

    DensityReport report = normalized_center_density(row.dimension, row.nmin, basis.det);
    row.delta_computed = report.delta;
    row.density = report.density;
    row.delta_analytic = prop47_bound(p, c, s, 1);
    row.sha_lower = sha_lower_bound(row.delta_computed, row.delta_analytic);
    row.sha_nontrivial = row.sha_lower > 1;
    row.best_known = best_known_normalized_density(row.dimension);

    if (opts.enumerate && basis.rank <= kShortestVectorMaxRank)
        row.min_norm_found = shortest_vector(basis).norm;
    if (opts.check_e8 && basis.rank == 8) row.e8 = is_e8(basis);

    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

GramMatrix legendre_gram(unsigned long d) {
    return gram_from_pair_values(
        d, [d](size_t i, size_t j) { return legendre_pairing(i, j, d); });
}

Table2Row table2_row(unsigned long p, unsigned long f) {
    auto start = std::chrono::steady_clock::now();
    LegendreParams params{p, f};
    params.validate();
    unsigned long d = params.d();

    Table2Row row;
    row.p = p;
    row.f = f;
    row.d = d;
    row.dimension = static_cast<long>(d) - 2;
    row.nmin_bound = legendre_min_norm_bound(d);

    LatticeBasis basis = saturate(legendre_gram(d));
    if (basis.rank != static_cast<size_t>(row.dimension))
        throw rank_deficiency_error("Legendre points span rank " + std::to_string(basis.rank) +
                                    ", expected d-2 = " + std::to_string(row.dimension));
    row.lattice_det = basis.det;

    DensityReport report = normalized_center_density(row.dimension, row.nmin_bound, basis.det);
    row.delta_bound = report.delta;
    row.density = report.density;
    row.best_known = best_known_normalized_density(row.dimension);
    if (basis.rank <= kShortestVectorMaxRank) row.enumerated_min_norm = shortest_vector(basis).norm;

    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace mwlat
