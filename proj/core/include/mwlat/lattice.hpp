// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/curve.hpp"
#include "mwlat/numeric.hpp"

#include <functional>
#include <vector>

namespace mwlat {

/// Symmetric matrix of exact height pairings of a generating set. The
/// generators are usually dependent; saturate() extracts a basis of the
/// lattice they generate.
struct GramMatrix {
    std::vector<std::vector<Rational>> entries;
    size_t n_gen() const { return entries.size(); }
    /// Least common denominator of all entries (the integer-lattice scale).
    BigInt scale() const;
};

GramMatrix gram_from_entries(std::vector<std::vector<Rational>> entries);
GramMatrix gram_from_pair_values(size_t n, const std::function<Rational(size_t, size_t)>& pair);

using PairFn = std::function<Rational(const CurvePoint&, const CurvePoint&)>;
using PointNegFn = std::function<CurvePoint(const CurvePoint&)>;

/// Builds the pairing matrix of a point set after dropping duplicate points
/// and one of each P/-P pair (rows equal up to sign carry no new lattice
/// information). Pair evaluations are independent and run on `threads`
/// workers (0 = hardware concurrency).
GramMatrix gram_from_points(const std::vector<CurvePoint>& points, const PairFn& pair,
                            const PointNegFn& negate, unsigned threads = 0);

/// Basis Gram matrix of the lattice generated by the full generator set.
struct LatticeBasis {
    size_t rank = 0;
    std::vector<std::vector<Rational>> gram;
    Rational det;
};

/// Exact saturation: rank-revealing selection of an independent subset B,
/// rational coordinates of every generator in B, then Hermite-style integer
/// triangularization of the scaled coordinate rows. The result depends only
/// on the generated lattice, not on generator order or redundancy.
LatticeBasis saturate(const GramMatrix& g);

/// sqrt(det), carried exactly as a radical value.
RadicalValue covolume(const LatticeBasis& b);

struct DensityReport {
    long n = 0;
    Rational nmin;
    Rational det;
    Rational rho_squared;  // nmin / 4
    RadicalValue delta;    // det^(-1/2) (nmin/4)^(n/2)
    double density = 0.0;  // via the Gamma-function bridge
};

DensityReport normalized_center_density(long n, const Rational& nmin, const Rational& det);

struct ShortestVectorResult {
    Rational norm;
    std::vector<long> coeffs; // in terms of the basis
};

/// Exact shortest nonzero vector by Fincke-Pohst enumeration over the
/// LLL-reduced basis. Refuses ranks above 12; callers fall back to the
/// analytic minimum-norm bounds.
ShortestVectorResult shortest_vector(const LatticeBasis& b);
inline constexpr size_t kShortestVectorMaxRank = 12;

/// rank 8, determinant 1, integral and even: the unique such lattice is E8;
/// the minimum norm 2 is confirmed by enumeration.
bool is_e8(const LatticeBasis& b);

/// Triangular real coordinates reproducing the Gram matrix (Cholesky).
/// Export/inspection only; never feeds back into exact computations.
std::vector<std::vector<double>> euclidean_embedding(const LatticeBasis& b);

} // namespace mwlat
