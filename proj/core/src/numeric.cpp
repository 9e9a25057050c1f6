// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/numeric.hpp"

#include "mwlat/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace mwlat {

BigInt pow_bigint(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw internal_error("pow_rational: zero base, negative exponent");
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational out(pow_bigint(base.get_num(), e), pow_bigint(base.get_den(), e));
    out.canonicalize();
    if (exp < 0) out = 1 / out;
    return out;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw internal_error("isqrt of negative value");
    BigInt out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_den().get_mpz_t())) return std::nullopt;
    Rational out(isqrt(x.get_num()), isqrt(x.get_den()));
    out.canonicalize();
    return out;
}

namespace {

const BigInt kTen = 10;

// Number of decimal digits of |n|, n != 0. mpz_sizeinbase may overestimate
// by one for base 10; correct with an exact comparison.
long digit_count(const BigInt& n) {
    long est = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
    if (est > 1 && abs(n) < pow_bigint(kTen, est - 1)) --est;
    return est;
}

// mpz_sizeinbase may overestimate by one; fix by exact comparison.
// Returns E with 10^(E-1) <= v < 10^E for v > 0.
long decimal_exponent(const BigInt& num, const BigInt& den) {
    long e = digit_count(num) - digit_count(den) + 1;
    // v*10^-e in [0.1, 1): adjust until num*10^? brackets hold
    while (true) {
        // check num < den * 10^e  i.e.  v < 10^e
        if (e >= 0 ? (num < den * pow_bigint(kTen, e)) : (num * pow_bigint(kTen, -e) < den)) {
            // check v >= 10^(e-1)
            long f = e - 1;
            if (f >= 0 ? (num >= den * pow_bigint(kTen, f)) : (num * pow_bigint(kTen, -f) >= den)) return e;
            --e;
        } else {
            ++e;
        }
    }
}

struct Digits {
    std::string mantissa; // significant digits, no sign
    long exponent = 0;    // value = 0.mantissa * 10^exponent
    bool negative = false;
    bool exact = false;   // mantissa reproduces the value exactly
};

std::string format_digits(Digits d) {
    if (d.exact) {
        size_t last = d.mantissa.find_last_not_of('0');
        if (last == std::string::npos)
            d.mantissa = "0";
        else
            d.mantissa.erase(last + 1);
    }
    std::string out = d.negative ? "-" : "";
    long e = d.exponent;
    long n = static_cast<long>(d.mantissa.size());
    if (e > 0 && e <= 9) {
        if (e >= n) {
            out += d.mantissa + std::string(e - n, '0');
        } else {
            out += d.mantissa.substr(0, e) + "." + d.mantissa.substr(e);
        }
    } else if (e <= 0 && e > -4) {
        out += "0." + std::string(-e, '0') + d.mantissa;
    } else {
        out += d.mantissa.substr(0, 1);
        if (n > 1) out += "." + d.mantissa.substr(1);
        long sci = e - 1;
        out += "e";
        if (sci >= 0) out += "+";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%02ld", std::labs(sci));
        out += (sci < 0 ? "-" : "") + std::string(buf);
    }
    return out;
}

std::string digits_of(const BigInt& m) { return m.get_str(); }

} // namespace

std::string decimal_string(const Rational& x, int sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    if (x == 0) return "0";
    Digits d;
    d.negative = (x < 0);
    BigInt num = abs(x.get_num());
    BigInt den = x.get_den();
    long e = decimal_exponent(num, den);
    // scaled = v * 10^(sig - e), an integer in [10^(sig-1), 10^sig) before rounding
    long shift = sig_digits - e;
    BigInt sn = num, sd = den;
    if (shift >= 0)
        sn *= pow_bigint(kTen, shift);
    else
        sd *= pow_bigint(kTen, -shift);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sn.get_mpz_t(), sd.get_mpz_t());
    BigInt twice = 2 * r;
    if (twice > sd || (twice == sd && mpz_odd_p(q.get_mpz_t()))) q += 1;
    d.exact = (r == 0);
    if (digit_count(q) > sig_digits) { // rounded up to 10^sig
        q /= 10;
        ++e;
        d.exact = false;
    }
    d.mantissa = digits_of(q);
    d.exponent = e;
    return format_digits(d);
}

std::string decimal_sqrt_string(const Rational& squared, int sig_digits) {
    if (squared < 0) throw internal_error("decimal_sqrt_string of negative value");
    if (sig_digits < 1) sig_digits = 1;
    if (squared == 0) return "0";
    if (auto root = exact_sqrt(squared)) return decimal_string(*root, sig_digits);
    BigInt num = squared.get_num(), den = squared.get_den();
    // leading exponent e of sqrt(v): 10^(2e-2) <= v < 10^(2e)
    long e2 = decimal_exponent(num, den); // 10^(e2-1) <= v < 10^e2
    long e = (e2 % 2 == 0) ? e2 / 2 : (e2 + 1) / 2;
    // fix up: require v >= 10^(2e-2)
    {
        long f = 2 * e - 2;
        bool ge = f >= 0 ? (num >= den * pow_bigint(kTen, f)) : (num * pow_bigint(kTen, -f) >= den);
        if (!ge) --e;
    }
    // w = floor(sqrt(v) * 10^(sig-e)) = floor(sqrt(N/D)) with N/D = v*10^(2(sig-e))
    long shift = 2 * (sig_digits - e);
    BigInt N = num, D = den;
    if (shift >= 0)
        N *= pow_bigint(kTen, shift);
    else
        D *= pow_bigint(kTen, -shift);
    BigInt s = isqrt(N * D);
    BigInt w = s / D; // floor(sqrt(N/D)), exact: see sqrt(N/D) = sqrt(ND)/D
    // round: compare sqrt(N/D) against w + 1/2 via 4N ? D(2w+1)^2
    BigInt lhs = 4 * N;
    BigInt rhs = D * (2 * w + 1) * (2 * w + 1);
    if (lhs > rhs || (lhs == rhs && mpz_odd_p(w.get_mpz_t()))) w += 1;
    Digits d;
    d.exact = false; // perfect squares were handled above
    if (digit_count(w) > sig_digits) {
        w /= 10;
        ++e;
    }
    d.mantissa = digits_of(w);
    d.exponent = e;
    return format_digits(d);
}

RadicalValue::RadicalValue(const Rational& a, const Rational& b) : rational_(a), radicand_(b) {
    if (b <= 0) throw internal_error("RadicalValue radicand must be positive");
    if (auto root = exact_sqrt(radicand_)) {
        rational_ *= *root;
        radicand_ = 1;
    }
    if (rational_ == 0) radicand_ = 1;
}

std::optional<Rational> RadicalValue::as_rational() const {
    if (radicand_ == 1) return rational_;
    return std::nullopt;
}

Rational RadicalValue::squared() const { return rational_ * rational_ * radicand_; }

double RadicalValue::to_double() const {
    return rational_.get_d() * std::sqrt(radicand_.get_d());
}

std::string RadicalValue::decimal(int sig_digits) const {
    std::string mag = decimal_sqrt_string(squared(), sig_digits);
    return (rational_ < 0 ? "-" : "") + mag;
}

RadicalValue RadicalValue::operator*(const Rational& c) const {
    RadicalValue out(*this);
    out.rational_ *= c;
    if (out.rational_ == 0) out.radicand_ = 1;
    return out;
}

RadicalValue RadicalValue::operator/(const RadicalValue& other) const {
    if (other.rational_ == 0) throw internal_error("RadicalValue division by zero");
    // a1 sqrt(b1) / (a2 sqrt(b2)) = (a1 / (a2 b2)) sqrt(b1 b2)
    return RadicalValue(rational_ / (other.rational_ * other.radicand_), radicand_ * other.radicand_);
}

bool RadicalValue::operator==(const RadicalValue& other) const {
    if ((rational_ < 0) != (other.rational_ < 0)) return false;
    return squared() == other.squared();
}

GammaHalfInteger gamma_half_integer(long n) {
    if (n < 0) throw internal_error("gamma_half_integer: negative rank");
    GammaHalfInteger g;
    if (n % 2 == 0) {
        g.coeff = 1;
        for (long k = 2; k <= n / 2; ++k) g.coeff *= k; // (n/2)!
        g.has_sqrt_pi = false;
    } else {
        // Gamma(n/2 + 1) = (n/2)(n/2 - 1)...(1/2) Gamma(1/2)
        g.coeff = 1;
        for (Rational x(n, 2); x > 0; x -= 1) g.coeff *= x;
        g.has_sqrt_pi = true;
    }
    return g;
}

double density_from_normalized(long n, const RadicalValue& delta) {
    if (n < 1) throw internal_error("density_from_normalized: rank must be >= 1");
    GammaHalfInteger g = gamma_half_integer(n);
    // delta * pi^(n/2) / Gamma(n/2+1); for odd n the sqrt(pi) of Gamma(1/2)
    // cancels one half power, leaving an integer power of pi.
    long pi_power = g.has_sqrt_pi ? (n - 1) / 2 : n / 2;
    Rational coeff = delta.rational_part() / g.coeff;
    double out = coeff.get_d() * std::sqrt(delta.radicand().get_d());
    for (long i = 0; i < pi_power; ++i) out *= M_PI;
    return out;
}

} // namespace mwlat
