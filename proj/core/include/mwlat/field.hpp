// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mwlat/numeric.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mwlat {

bool is_prime(unsigned long n);

/// Immutable description of GF(p^s). Elements are coefficient vectors over
/// GF(p) reduced modulo a monic irreducible of degree s. Construction is
/// deterministic: the modulus is the lexicographically least monic
/// irreducible of degree s (coefficient tuples compared low-degree-first),
/// so two contexts with equal (p, s) are bitwise identical.
struct FieldCtx {
    unsigned long p = 0;
    unsigned long s = 0;
    std::vector<std::uint32_t> modulus; // length s+1, monic, low-to-high
    BigInt r;                           // p^s
    // factorization of r - 1 (prime, multiplicity), used for element orders
    std::vector<std::pair<BigInt, int>> unit_factors;
    // x^(s+k) mod modulus for k = 0..s-2, each a length-s row
    std::vector<std::vector<std::uint32_t>> xpow;

    bool same_field(const FieldCtx& other) const { return p == other.p && s == other.s; }
};

using Field = std::shared_ptr<const FieldCtx>;

/// Deterministic construction of GF(p^s). Throws invalid_family_error for
/// non-prime p or s = 0.
Field make_field(unsigned long p, unsigned long s);

class FieldElement {
public:
    FieldElement() = default; // detached element, only assignable
    explicit FieldElement(const FieldCtx& ctx) : ctx_(&ctx), c_(ctx.s, 0) {}

    static FieldElement from_int(const FieldCtx& ctx, long v);
    /// Inverse of to_integer: base-p digits of enc are the coefficients.
    static FieldElement from_integer(const FieldCtx& ctx, const BigInt& enc);
    static FieldElement from_coeffs(const FieldCtx& ctx, const std::vector<std::uint32_t>& coeffs);

    const FieldCtx& ctx() const;
    bool attached() const { return ctx_ != nullptr; }

    /// Integer encoding sum c_i p^i in [0, r); a total order on the field
    /// used wherever deterministic enumeration matters.
    BigInt to_integer() const;
    std::vector<std::uint32_t> coeffs() const { return {c_.begin(), c_.end()}; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(const BigInt& e) const;
    /// x -> x^p, the GF(p)-linear Frobenius.
    FieldElement frobenius() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const; // integer encoding as decimal

private:
    const FieldCtx* ctx_ = nullptr;
    boost::container::small_vector<std::uint32_t, 16> c_;

    friend FieldElement mul_impl(const FieldElement&, const FieldElement&);
};

/// Multiplicative order of a nonzero element, via the stored factorization
/// of r - 1.
BigInt element_order(const FieldElement& a);

/// Deterministic generator of the unit group: the least integer encoding
/// whose element has order r - 1.
FieldElement primitive_root(const FieldCtx& ctx);

/// Per-condition result of the "sufficiently large" test for the family
/// y^2 = x^3 + t^q - t with q = p^c, r = p^s.
struct SufficiencyCheck {
    bool s_multiple_of_c = false;
    bool eight_divides_p1s = false;     // 8 | (p+1)s
    bool three_qm1_divides_rm1 = false; // 3(p^c - 1) | p^s - 1
    bool ok() const { return s_multiple_of_c && eight_divides_p1s && three_qm1_divides_rm1; }
    /// Name of the first failing condition, empty when ok().
    std::string failed_condition() const;
};

/// Validates p prime > 3, p = -1 mod 6, c odd; throws invalid_family_error
/// otherwise. Then reports the three divisibility conditions.
SufficiencyCheck check_sufficiently_large(unsigned long p, unsigned long c, unsigned long s);
bool is_sufficiently_large(unsigned long p, unsigned long c, unsigned long s);

/// Least s for which is_sufficiently_large(p, c, s) holds.
unsigned long min_sufficient_s(unsigned long p, unsigned long c);

/// All solutions of sigma^(6(q-1)) = -1 in the field, sorted by integer
/// encoding; exactly 6(q-1) of them. Throws no_solution_error when
/// 12(q-1) does not divide r - 1.
std::vector<FieldElement> solve_sigma(const FieldCtx& ctx, unsigned long q);

/// All solutions of beta^q + beta = 1, solved as an affine GF(p)-linear
/// system in the power basis; exactly q of them, sorted by encoding.
std::vector<FieldElement> solve_beta(const FieldCtx& ctx, unsigned long q);

} // namespace mwlat
