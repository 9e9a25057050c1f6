// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/bounds.hpp"
#include "mwlat/lattice.hpp"

#include <benchmark/benchmark.h>

using namespace mwlat;

static void BM_SaturateLegendre(benchmark::State& state) {
    GramMatrix g = legendre_gram(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(saturate(g));
    }
}
BENCHMARK(BM_SaturateLegendre)->Arg(6)->Arg(10)->Arg(28);

static void BM_ShortestVector(benchmark::State& state) {
    LatticeBasis b = saturate(legendre_gram(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shortest_vector(b));
    }
}
BENCHMARK(BM_ShortestVector)->Arg(6)->Arg(10)->Arg(14);
