// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mwlat {

/// Exact rational number. All heights, pairings and determinants are carried
/// in this type; floating point appears only at report boundaries.
using Rational = mpq_class;
using BigInt = mpz_class;

BigInt pow_bigint(const BigInt& base, unsigned long exp);
Rational pow_rational(const Rational& base, long exp);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// sqrt(x) when x is a square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Decimal rendering of an exact rational with round-half-even at
/// `sig_digits` significant digits. Terminating decimals shorter than the
/// requested precision are printed exactly (trailing zeros trimmed).
std::string decimal_string(const Rational& x, int sig_digits = 9);

/// Decimal rendering of sqrt(squared), squared >= 0. Same rounding and
/// trimming rules as decimal_string.
std::string decimal_sqrt_string(const Rational& squared, int sig_digits = 9);

/// A value of the form a * sqrt(b) with a, b exact rationals and b > 0.
/// Covers every quantity the density pipelines produce: normalized center
/// densities (rational / sqrt(det)) and the analytic bound (which picks up
/// sqrt(p) when s * floor(q/6) is odd). Normalization folds perfect-square
/// b into a, so purely rational values always have b = 1.
class RadicalValue {
public:
    RadicalValue() : rational_(0), radicand_(1) {}
    explicit RadicalValue(const Rational& a) : rational_(a), radicand_(1) {}
    RadicalValue(const Rational& a, const Rational& b);

    const Rational& rational_part() const { return rational_; }
    const Rational& radicand() const { return radicand_; }

    bool is_rational() const { return radicand_ == 1; }
    /// Exact rational value when radicand is 1, nullopt otherwise.
    std::optional<Rational> as_rational() const;
    /// value^2, always exact.
    Rational squared() const;

    double to_double() const;
    std::string decimal(int sig_digits = 9) const;

    RadicalValue operator*(const Rational& c) const;
    RadicalValue operator/(const RadicalValue& other) const;
    bool operator==(const RadicalValue& other) const;

private:
    Rational rational_;
    Rational radicand_;
};

/// Gamma(n/2 + 1) by the exact recurrence Gamma(1) = 1, Gamma(1/2) = sqrt(pi),
/// Gamma(x+1) = x Gamma(x). Value is coeff * sqrt(pi)^(has_sqrt_pi).
struct GammaHalfInteger {
    Rational coeff;
    bool has_sqrt_pi = false;
};
GammaHalfInteger gamma_half_integer(long n);

/// Packing density from the normalized center density:
/// delta * pi^(n/2) / Gamma(n/2 + 1). The pi powers and the Gamma recurrence
/// stay exact; floating point enters only in the final multiply.
double density_from_normalized(long n, const RadicalValue& delta);

} // namespace mwlat
