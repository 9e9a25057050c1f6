// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every published-table criterion at its stated
// tolerance and prints one pass/fail line per criterion. The q = 17 row
// (criterion 5) takes minutes and is gated behind --long; without the flag
// it is reported as SKIP and does not affect the exit code.
//
//   acceptance [--long] [--only N]

#include "mwlat/bounds.hpp"
#include "mwlat/errors.hpp"
#include "mwlat/io.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace mwlat;

namespace {

struct Harness {
    int failures = 0;
    int current = 0;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "      FAILED: " << what << "\n";
        }
    }
    template <typename A, typename B>
    void check_eq(const A& a, const B& b, const std::string& what) {
        check(a == b, what);
    }
    void check_rel(double actual, double expected, double tol, const std::string& what) {
        double rel = std::fabs(actual / expected - 1.0);
        std::ostringstream os;
        os << what << " (actual " << actual << ", expected " << expected << ", rel " << rel << ", tol "
           << tol << ")";
        check(rel <= tol, os.str());
    }
};

int g_exit = 0;

void run_criterion(int n, const std::string& title, const std::function<void(Harness&)>& body) {
    Harness h;
    h.current = n;
    double seconds = 0;
    try {
        auto start = std::chrono::steady_clock::now();
        body(h);
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::exception& e) {
        h.check(false, std::string("exception: ") + e.what());
    }
    bool pass = h.failures == 0;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " - " << title << "  ["
              << seconds << " s]\n";
    if (!pass) {
        std::cout << h.detail.str();
        g_exit = 1;
    }
}

void skip_criterion(int n, const std::string& title, const std::string& why) {
    std::cout << "criterion " << n << ": SKIP - " << title << "  (" << why << ")\n";
}

Rational rat(long num, long den = 1) { return Rational(num, den); }

} // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) long_run = true;
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    auto wants = [&](int n) { return only == 0 || only == n; };

    // --- criterion 1: Table 1, q = 5, s in {4, 8, 12}: delta = 1/16 exactly
    if (wants(1)) run_criterion(1, "q=5 rows give delta = 1/16 exactly for s = 4, 8, 12 (< 60 s each)", [](Harness& h) {
        for (unsigned long s : {4ul, 8ul, 12ul}) {
            Table1Row row = table1_row(5, 1, s);
            h.check(row.delta_computed.is_rational(), "delta_computed rational (s=" + std::to_string(s) + ")");
            h.check_eq(row.delta_computed.squared(), rat(1, 256),
                       "delta_computed == 1/16 exactly (s=" + std::to_string(s) + ")");
            h.check(row.delta_analytic.is_rational(), "delta_analytic rational");
            h.check_eq(row.delta_analytic.squared(), rat(1, 256),
                       "delta_analytic == 1/16 exactly (s=" + std::to_string(s) + ")");
            h.check(row.seconds < 60.0, "runtime < 60 s (s=" + std::to_string(s) + ", took " +
                                            std::to_string(row.seconds) + ")");
        }
    });

    // --- criterion 2: the q = 5 saturated lattice is E8
    if (wants(2)) run_criterion(2, "q=5 saturated lattice is E8 (rank 8, det 1, even, min norm 2)", [](Harness& h) {
        Table1Row row = table1_row(5, 1, 4);
        h.check_eq(row.dimension, 8l, "rank 8");
        h.check_eq(row.lattice_det, rat(1), "det 1");
        h.check(row.e8.has_value() && *row.e8, "is_e8 verdict");
        h.check(row.min_norm_found.has_value() && *row.min_norm_found == 2, "minimum norm 2");
    });

    // --- criterion 3: Table 1, q = 11, r = 11^2
    if (wants(3)) run_criterion(3, "q=11, r=11^2: delta = 1/11 (<= 0.1% rel; analytic exact), dim 20 (< 10 min)", [](Harness& h) {
        Table1Row row = table1_row(11, 1, 2);
        h.check_eq(row.dimension, 20l, "dimension 20");
        h.check_rel(row.delta_computed.to_double(), 1.0 / 11.0, 0.001, "delta_computed vs 1/11");
        h.check(row.delta_analytic.is_rational(), "delta_analytic rational");
        h.check_eq(*row.delta_analytic.as_rational(), rat(1, 11), "delta_analytic == 1/11 exactly");
        h.check(row.seconds < 600.0, "runtime < 10 min (took " + std::to_string(row.seconds) + ")");
        // expected exact: the computed route lands on 1/11 as well
        h.check_eq(row.delta_computed.squared(), rat(1, 121), "delta_computed exact value 1/11");
    });

    // --- criterion 4: q = 11, r = 11^6 analytic bound
    if (wants(4)) run_criterion(4, "q=11, r=11^6: analytic bound = 11^-3 exactly (~0.000751)", [](Harness& h) {
        RadicalValue v = prop47_bound(11, 1, 6);
        h.check(v.is_rational(), "bound is rational");
        h.check_eq(*v.as_rational(), rat(1, 1331), "equals 1/1331");
        h.check_rel(v.to_double(), 0.000751, 0.01, "decimal value");
    });

    // --- criterion 5: q = 17 long run
    if (wants(5)) {
        if (long_run) {
            run_criterion(5, "q=17, r=17^4: analytic (3/2)^16/17^4 exact, computed ~2.272, Sha nontrivial (< 2 h)", [](Harness& h) {
                Table1Row row = table1_row(17, 1, 4);
                Rational expected_analytic = pow_rational(rat(3, 2), 16) / rat(83521);
                h.check(row.delta_analytic.is_rational(), "analytic bound rational");
                h.check_eq(*row.delta_analytic.as_rational(), expected_analytic,
                           "analytic == (3/2)^16 / 17^4 exactly");
                h.check_rel(row.delta_analytic.to_double(), 0.007864, 0.001, "analytic decimal");
                h.check_rel(row.delta_computed.to_double(), 2.272, 0.01, "computed delta vs 2.272");
                h.check(row.sha_nontrivial, "Sha lower bound flagged nontrivial");
                h.check(row.sha_lower > 1, "Sha lower bound exceeds 1");
                h.check_eq(row.dimension, 32l, "dimension 32");
                h.check(row.seconds < 7200.0, "runtime < 2 h (took " + std::to_string(row.seconds) + ")");
            });
        } else {
            skip_criterion(5, "q=17 long-run row", "pass --long to run; ~minutes of compute");
        }
    }

    // --- criterion 6: all six Table 2 rows
    if (wants(6)) run_criterion(6, "Table 2: all six rows match to <= 0.5% (5% for the one-digit row) (< 60 s each)", [](Harness& h) {
        struct Expect {
            unsigned long p, f;
            long dim;
            double delta;
            double tol;
        };
        const Expect rows[] = {
            {3, 1, 2, 0.125, 0.005},     {3, 2, 8, 1.953e-6, 0.005}, {3, 3, 26, 3.208e-26, 0.005},
            {5, 1, 4, 0.005, 0.05},      {5, 2, 24, 8.119e-24, 0.005}, {7, 1, 6, 1.22e-4, 0.005},
        };
        for (const auto& e : rows) {
            Table2Row row = table2_row(e.p, e.f);
            std::string tag = "(p=" + std::to_string(e.p) + ", f=" + std::to_string(e.f) + ")";
            h.check_eq(row.dimension, e.dim, "dimension " + tag);
            h.check_rel(row.delta_bound.to_double(), e.delta, e.tol, "delta " + tag);
            h.check(row.seconds < 60.0, "runtime < 60 s " + tag);
        }
    });

    // --- criterion 7: closed-form lattice oracles against the general code
    if (wants(7)) run_criterion(7, "saturation oracles: d=4 det 9/16 and d=6 per-class det 25/12, exactly", [](Harness& h) {
        LatticeBasis d4 = saturate(legendre_gram(4));
        h.check_eq(d4.rank, size_t{2}, "d=4 rank 2");
        h.check_eq(d4.det, Rational(9, 16), "d=4 det == 9/16");
        // one parity class of d = 6: generators P_0, P_2, P_4
        GramMatrix cls = gram_from_pair_values(
            3, [](size_t i, size_t j) { return legendre_pairing(2 * i, 2 * j, 6); });
        LatticeBasis d6 = saturate(cls);
        h.check_eq(d6.rank, size_t{2}, "d=6 class rank 2");
        h.check_eq(d6.det, Rational(25, 12), "d=6 per-class det == 25/12");
        LatticeBasis d6full = saturate(legendre_gram(6));
        h.check_eq(d6full.det, Rational(625, 144), "d=6 full det == (25/12)^2");
    });

    // --- criterion 8: property suites
    if (wants(8)) run_criterion(8, "property suites: doubling, parallelogram, height floor, torsion, Prop 5.3/5.4, nice cross-check", [](Harness& h) {
        Field field = make_field(5, 4);
        CurveE1Params params{5, 1, 4};
        WeierstrassCurve E = e1_curve(*field, params);
        auto points = e1_explicit_points(*field, params, make_seed_set(*field, params));
        h.check_eq(points.size(), size_t{120}, "120 explicit points");
        auto hgt = [&](const CurvePoint& P) { return canonical_height_e1(E, P); };

        // h(2P) = 4 h(P) for every explicit point
        for (const auto& P : points)
            if (hgt(dbl(E, P)) != 4 * hgt(P)) {
                h.check(false, "h(2P) = 4h(P) fails on an explicit point");
                break;
            }
        // 50 random pairwise sums: doubling and parallelogram law
        std::mt19937 rng(20240811);
        for (int iter = 0; iter < 50; ++iter) {
            const CurvePoint& P = points[rng() % points.size()];
            const CurvePoint& Q = points[rng() % points.size()];
            CurvePoint S = add(E, P, Q);
            if (!S.is_identity() && hgt(dbl(E, S)) != 4 * hgt(S)) {
                h.check(false, "h(2P) = 4h(P) fails on a random sum");
                break;
            }
            Rational lhs = hgt(add(E, P, Q)) + hgt(add(E, P, neg(E, Q)));
            if (lhs != 2 * hgt(P) + 2 * hgt(Q)) {
                h.check(false, "parallelogram law fails");
                break;
            }
        }
        // naive height floor (q+1)/3 and torsion-freeness probe
        for (const auto& P : points)
            if (hgt(P) < 2) {
                h.check(false, "explicit point below the naive height floor");
                break;
            }
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (int iter = 0; iter < 10; ++iter) {
            CurvePoint acc = CurvePoint::identity();
            for (int j = 0; j < 8; ++j) {
                long nn = coeff(rng);
                if (nn) acc = add(E, acc, mul_scalar(E, nn, points[rng() % points.size()]));
            }
            if (!acc.is_identity() && hgt(acc) == 0) {
                h.check(false, "nonzero small combination with height 0 (torsion?)");
                break;
            }
        }
        // Legendre: heights are positive integer multiples of (d-1)/(2d)
        for (unsigned long d : {4ul, 6ul, 10ul}) {
            Rational unit = legendre_min_norm_bound(d);
            std::uniform_int_distribution<long> c2(-2, 2);
            for (int iter = 0; iter < 30; ++iter) {
                std::vector<long> a(d);
                for (auto& v : a) v = c2(rng);
                Rational hq(0);
                for (unsigned long i = 0; i < d; ++i)
                    for (unsigned long j = 0; j < d; ++j)
                        hq += Rational(a[i]) * Rational(a[j]) * legendre_pairing(i, j, d);
                Rational mult = hq / unit;
                if (mult.get_den() != 1 || hq < 0 || (hq != 0 && hq < unit)) {
                    h.check(false, "Legendre combination height not a positive multiple of (d-1)/(2d)");
                    break;
                }
            }
        }
        // Prop 5.3 matrix rank d-2 for d in {4, 6, 8, 10}
        for (unsigned long d : {4ul, 6ul, 8ul, 10ul})
            h.check_eq(saturate(legendre_gram(d)).rank, size_t{d - 2},
                       "Legendre rank d-2 for d=" + std::to_string(d));
        // nice_height equals canonical height on 20 random q=5 points
        NiceCurveProfile prof = nice_check(Poly(*field), Poly::tq_minus_t(*field, 5));
        h.check(prof.nice(), "E1 model is nice");
        for (int iter = 0; iter < 20; ++iter) {
            CurvePoint S = add(E, points[rng() % points.size()], points[rng() % points.size()]);
            if (S.is_identity()) continue;
            if (nice_height(prof, S) != hgt(S)) {
                h.check(false, "nice_height disagrees with the canonical height");
                break;
            }
        }
    });

    // --- criterion 9: stated out-of-scope row
    if (wants(9)) run_criterion(9, "q=5^3 (dimension 248) is out of scope; the code path exists behind --very-long", [](Harness& h) {
        // the minimal sufficient exponent for q = 5^3 is s = 12 (the
        // published table's r = 5^16 fails the divisibility conditions)
        h.check_eq(min_sufficient_s(5, 3), 12ul, "min sufficient s for q = 5^3 is 12");
        h.check(is_sufficiently_large(5, 3, 12), "r = 5^12 passes the sufficiency test");
        h.check(!is_sufficiently_large(5, 3, 16), "r = 5^16 does not pass (16 not a multiple of 3)");
        CurveE1Params params{5, 3, 12};
        params.validate(); // the pipeline accepts the parameters; no runtime obligation
        std::cout << "      note: dimension-248 row not reproduced at desk scale (no acceptance obligation)\n";
    });

    if (g_exit == 0)
        std::cout << "acceptance: all executed criteria PASS\n";
    else
        std::cout << "acceptance: FAILURES present\n";
    return g_exit;
}
