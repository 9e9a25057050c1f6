// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/field.hpp"
#include "mwlat/funcring.hpp"

#include <benchmark/benchmark.h>

using namespace mwlat;

static void BM_FieldMul(benchmark::State& state) {
    Field f = make_field(5, state.range(0));
    FieldElement a = FieldElement::from_integer(*f, f->r / 3);
    FieldElement b = FieldElement::from_integer(*f, f->r / 7);
    for (auto _ : state) {
        a = a * b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

static void BM_FieldInverse(benchmark::State& state) {
    Field f = make_field(17, 4);
    FieldElement a = FieldElement::from_integer(*f, 12345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_FieldInverse);

static void BM_MakeField(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_field(5, state.range(0)));
    }
}
BENCHMARK(BM_MakeField)->Arg(4)->Arg(12);

static void BM_PolyGcd(benchmark::State& state) {
    Field f = make_field(17, 4);
    Poly t = Poly::variable(*f);
    Poly a = (t.pow(3) + Poly::constant(*f, 2)).pow(6);
    Poly b = (t.pow(3) + Poly::constant(*f, 2)).pow(2) * (t.pow(5) + t + Poly::constant(*f, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd(a, b));
    }
}
BENCHMARK(BM_PolyGcd);
