// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/bounds.hpp"

#include <benchmark/benchmark.h>

using namespace mwlat;

static void BM_E1PointGeneration(benchmark::State& state) {
    Field field = make_field(5, 4);
    CurveE1Params params{5, 1, 4};
    ExplicitSeedSet seeds = make_seed_set(*field, params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e1_explicit_points(*field, params, seeds));
    }
}
BENCHMARK(BM_E1PointGeneration);

static void BM_PairingQ5(benchmark::State& state) {
    Field field = make_field(5, 4);
    CurveE1Params params{5, 1, 4};
    WeierstrassCurve E = e1_curve(*field, params);
    auto points = e1_explicit_points(*field, params, make_seed_set(*field, params));
    auto h = [&](const CurvePoint& P) { return canonical_height_e1(E, P); };
    size_t i = 0;
    for (auto _ : state) {
        const CurvePoint& P = points[i % points.size()];
        const CurvePoint& Q = points[(i * 7 + 3) % points.size()];
        benchmark::DoNotOptimize(pairing(E, h, P, Q));
        ++i;
    }
}
BENCHMARK(BM_PairingQ5);

static void BM_Table1RowQ5(benchmark::State& state) {
    Table1Options opts;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(table1_row(5, 1, 4, opts));
    }
}
BENCHMARK(BM_Table1RowQ5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
