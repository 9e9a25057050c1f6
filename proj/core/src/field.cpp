// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/field.hpp"

#include "mwlat/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mwlat {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// --- polynomial arithmetic over GF(p) on raw coefficient vectors ---------
// Used for the modulus sieve and for element inversion. Vectors are
// low-to-high; the zero polynomial is the empty vector.

using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

unsigned long mod_inverse(unsigned long a, unsigned long p) {
    long t = 0, nt = 1;
    long r = static_cast<long>(p), nr = static_cast<long>(a % p);
    while (nr != 0) {
        long quot = r / nr;
        std::swap(t -= quot * nt, nt);
        std::swap(r -= quot * nr, nr);
    }
    if (r != 1) throw internal_error("mod_inverse: not invertible");
    return static_cast<unsigned long>(t < 0 ? t + static_cast<long>(p) : t);
}

PVec pmul(const PVec& a, const PVec& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    PVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    ptrim(out);
    return out;
}

PVec psub(const PVec& a, const PVec& b, unsigned long p) {
    PVec out = a;
    if (b.size() > out.size()) out.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) out[i] = static_cast<std::uint32_t>((out[i] + p - b[i]) % p);
    ptrim(out);
    return out;
}

// a mod b, b != 0
PVec pmod(PVec a, const PVec& b, unsigned long p) {
    unsigned long lc_inv = mod_inverse(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        unsigned long coef = static_cast<unsigned long>(a.back()) * lc_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - coef * b[i] % p) % p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PVec pgcd(PVec a, PVec b, unsigned long p) {
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        unsigned long inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
    }
    return a;
}

// x^(p^k) mod f, via k applications of t(x) -> t(x^p) using a precomputed
// table of x^(ip) mod f.
PVec frob_power_x(unsigned long p, unsigned long k, const PVec& f) {
    size_t s = f.size() - 1;
    PVec xp{0, 1}; // x
    for (unsigned long e = 1; e < p; ++e) xp = pmod(pmul(xp, PVec{0, 1}, p), f, p);
    // xp = x^p mod f; table of x^(ip) mod f
    std::vector<PVec> table(s);
    table[0] = PVec{1};
    for (size_t i = 1; i < s; ++i) table[i] = pmod(pmul(table[i - 1], xp, p), f, p);
    PVec t{0, 1};
    for (unsigned long step = 0; step < k; ++step) {
        PVec next;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0) continue;
            PVec term = table[i];
            for (auto& c : term) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * t[i] % p);
            next = psub(next, psub(PVec{}, term, p), p); // next += term
        }
        t = std::move(next);
    }
    return t;
}

bool is_irreducible(const PVec& f, unsigned long p) {
    size_t s = f.size() - 1;
    if (s == 0) return false;
    if (s == 1) return true;
    if (f[0] == 0) return false; // x divides
    // Rabin: x^(p^s) = x mod f, and gcd(x^(p^(s/l)) - x, f) = 1 for primes l | s
    PVec xs = frob_power_x(p, s, f);
    if (psub(xs, PVec{0, 1}, p) != PVec{}) return false;
    unsigned long rem = s;
    for (unsigned long l = 2; l <= rem; ++l) {
        if (rem % l != 0) continue;
        while (rem % l == 0) rem /= l;
        PVec xe = frob_power_x(p, s / l, f);
        PVec g = pgcd(psub(xe, PVec{0, 1}, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

PVec least_irreducible(unsigned long p, unsigned long s) {
    // odometer over (c_0, ..., c_{s-1}), last coordinate fastest: this is
    // lexicographic order low-degree-first
    PVec coeffs(s, 0);
    while (true) {
        PVec f = coeffs;
        f.push_back(1); // monic
        if (is_irreducible(f, p)) return f;
        size_t i = s;
        while (i > 0) {
            --i;
            if (++coeffs[i] < p) break;
            coeffs[i] = 0;
            if (i == 0) throw internal_error("no irreducible of requested degree found");
        }
    }
}

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int m = 0;
            while (n % d == 0) {
                n /= d;
                ++m;
            }
            out.emplace_back(d, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace

Field make_field(unsigned long p, unsigned long s) {
    if (!is_prime(p)) throw invalid_family_error("make_field: p = " + std::to_string(p) + " is not prime");
    if (s == 0) throw invalid_family_error("make_field: extension degree s must be >= 1");
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->s = s;
    ctx->modulus = least_irreducible(p, s);
    ctx->r = pow_bigint(BigInt(p), s);
    ctx->unit_factors = factorize(ctx->r - 1);
    // reduction rows x^(s+k) mod modulus
    PVec cur(s + 1, 0);
    cur[s] = 1; // x^s
    cur = pmod(cur, ctx->modulus, p);
    cur.resize(s, 0);
    for (unsigned long k = 0; k + 1 < s; ++k) {
        if (k > 0) {
            // multiply by x, reduce
            PVec next(s + 1, 0);
            for (unsigned long i = 0; i < s; ++i) next[i + 1] = cur[i];
            next = pmod(next, ctx->modulus, p);
            next.resize(s, 0);
            cur = next;
        }
        ctx->xpow.push_back(std::vector<std::uint32_t>(cur.begin(), cur.end()));
    }
    return ctx;
}

FieldElement FieldElement::from_int(const FieldCtx& ctx, long v) {
    FieldElement out(ctx);
    long m = static_cast<long>(ctx.p);
    long res = ((v % m) + m) % m;
    out.c_[0] = static_cast<std::uint32_t>(res);
    return out;
}

FieldElement FieldElement::from_integer(const FieldCtx& ctx, const BigInt& enc) {
    if (enc < 0 || enc >= ctx.r) throw internal_error("from_integer: encoding out of range");
    FieldElement out(ctx);
    BigInt v = enc;
    for (unsigned long i = 0; i < ctx.s && v != 0; ++i) {
        BigInt digit = v % ctx.p;
        out.c_[i] = static_cast<std::uint32_t>(digit.get_ui());
        v /= ctx.p;
    }
    return out;
}

FieldElement FieldElement::from_coeffs(const FieldCtx& ctx, const std::vector<std::uint32_t>& coeffs) {
    if (coeffs.size() > ctx.s) throw internal_error("from_coeffs: too many coefficients");
    FieldElement out(ctx);
    for (size_t i = 0; i < coeffs.size(); ++i) out.c_[i] = coeffs[i] % ctx.p;
    return out;
}

const FieldCtx& FieldElement::ctx() const {
    if (!ctx_) throw internal_error("operation on detached FieldElement");
    return *ctx_;
}

BigInt FieldElement::to_integer() const {
    BigInt out = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        out *= ctx().p;
        out += c_[i];
    }
    return out;
}

bool FieldElement::is_zero() const {
    ctx();
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    ctx();
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!ctx().same_field(o.ctx())) throw internal_error("field context mismatch in +");
    FieldElement out(*ctx_);
    unsigned long p = ctx_->p;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = (c_[i] + o.c_[i]) % p;
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!ctx().same_field(o.ctx())) throw internal_error("field context mismatch in -");
    FieldElement out(*ctx_);
    unsigned long p = ctx_->p;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = static_cast<std::uint32_t>((c_[i] + p - o.c_[i]) % p);
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(ctx());
    unsigned long p = ctx_->p;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = static_cast<std::uint32_t>((p - c_[i]) % p);
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!ctx().same_field(o.ctx())) throw internal_error("field context mismatch in *");
    const FieldCtx& f = *ctx_;
    unsigned long s = f.s, p = f.p;
    FieldElement out(f);
    if (s == 1) {
        out.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
        return out;
    }
    boost::container::small_vector<std::uint64_t, 32> acc(2 * s - 1, 0);
    for (size_t i = 0; i < s; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < s; ++j) acc[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
    }
    for (size_t k = 2 * s - 2; k >= s; --k) {
        std::uint64_t v = acc[k] % p;
        if (v == 0) continue;
        const auto& row = f.xpow[k - s];
        for (size_t i = 0; i < s; ++i) acc[i] += v * row[i];
    }
    for (size_t i = 0; i < s; ++i) out.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
    return out;
}

FieldElement FieldElement::inverse() const {
    const FieldCtx& f = ctx();
    if (is_zero()) throw internal_error("field inverse of zero");
    // extended Euclid in GF(p)[x] against the modulus
    unsigned long p = f.p;
    PVec r0(f.modulus.begin(), f.modulus.end());
    PVec r1(c_.begin(), c_.end());
    ptrim(r1);
    PVec t0{}, t1{1};
    while (!r1.empty()) {
        // quotient of r0 / r1
        PVec q;
        PVec rem = r0;
        unsigned long lc_inv = mod_inverse(r1.back(), p);
        while (pdeg(rem) >= pdeg(r1)) {
            unsigned long coef = static_cast<unsigned long>(rem.back()) * lc_inv % p;
            size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = static_cast<std::uint32_t>(coef);
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - coef * r1[i] % p) % p);
            ptrim(rem);
            if (rem.empty()) break;
        }
        PVec t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw internal_error("field inverse: element not invertible");
    unsigned long scale = mod_inverse(r0[0], p);
    FieldElement out(f);
    for (size_t i = 0; i < t0.size(); ++i)
        out.c_[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t0[i]) * scale % p);
    return out;
}

FieldElement FieldElement::pow(const BigInt& e) const {
    const FieldCtx& f = ctx();
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement out = from_int(f, 1);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return out;
    for (size_t i = bits; i-- > 0;) {
        out = out * out;
        if (mpz_tstbit(e.get_mpz_t(), i)) out = out * base;
    }
    return out;
}

FieldElement FieldElement::frobenius() const { return pow(BigInt(ctx().p)); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (!ctx_ || !o.ctx_) return ctx_ == o.ctx_;
    if (!ctx_->same_field(*o.ctx_)) return false;
    return std::equal(c_.begin(), c_.end(), o.c_.begin());
}

std::string FieldElement::to_string() const { return to_integer().get_str(); }

BigInt element_order(const FieldElement& a) {
    const FieldCtx& f = a.ctx();
    if (a.is_zero()) throw internal_error("element_order of zero");
    BigInt order = f.r - 1;
    for (const auto& [prime, mult] : f.unit_factors) {
        for (int i = 0; i < mult; ++i) {
            BigInt candidate = order / prime;
            if (order % prime == 0 && a.pow(candidate).is_one())
                order = candidate;
            else
                break;
        }
    }
    return order;
}

FieldElement primitive_root(const FieldCtx& ctx) {
    BigInt group = ctx.r - 1;
    for (BigInt enc = 2; enc < ctx.r; ++enc) {
        FieldElement e = FieldElement::from_integer(ctx, enc);
        bool primitive = true;
        for (const auto& [prime, mult] : ctx.unit_factors) {
            (void)mult;
            if (e.pow(group / prime).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return e;
    }
    throw internal_error("no primitive root found"); // unreachable: group is cyclic
}

std::string SufficiencyCheck::failed_condition() const {
    if (!s_multiple_of_c) return "c | s";
    if (!eight_divides_p1s) return "8 | (p+1)s";
    if (!three_qm1_divides_rm1) return "3(p^c-1) | p^s-1";
    return "";
}

SufficiencyCheck check_sufficiently_large(unsigned long p, unsigned long c, unsigned long s) {
    if (!is_prime(p) || p <= 3)
        throw invalid_family_error("family requires a prime p > 3, got p = " + std::to_string(p));
    if (p % 6 != 5) throw invalid_family_error("family requires p = -1 mod 6, got p = " + std::to_string(p));
    if (c == 0 || c % 2 == 0)
        throw invalid_family_error("family requires odd c >= 1, got c = " + std::to_string(c));
    if (s == 0) throw invalid_family_error("s must be >= 1");
    SufficiencyCheck out;
    out.s_multiple_of_c = (s % c == 0);
    out.eight_divides_p1s = ((p + 1) * s % 8 == 0);
    BigInt q = pow_bigint(BigInt(p), c);
    BigInt r = pow_bigint(BigInt(p), s);
    out.three_qm1_divides_rm1 = ((r - 1) % (3 * (q - 1)) == 0);
    return out;
}

bool is_sufficiently_large(unsigned long p, unsigned long c, unsigned long s) {
    return check_sufficiently_large(p, c, s).ok();
}

unsigned long min_sufficient_s(unsigned long p, unsigned long c) {
    // valid s are exactly the common multiples of three divisibility moduli,
    // so the search terminates at their lcm; 10^5 is a generous cap
    for (unsigned long s = 1; s <= 100000; ++s)
        if (is_sufficiently_large(p, c, s)) return s;
    throw internal_error("min_sufficient_s: no sufficient s below search cap");
}

namespace {

unsigned long exact_p_power_exponent(const FieldCtx& ctx, unsigned long q) {
    unsigned long c = 0;
    unsigned long v = q;
    while (v > 1) {
        if (v % ctx.p != 0) throw invalid_family_error("q must be a power of p");
        v /= ctx.p;
        ++c;
    }
    if (c == 0) throw invalid_family_error("q must be a positive power of p");
    return c;
}

} // namespace

std::vector<FieldElement> solve_sigma(const FieldCtx& ctx, unsigned long q) {
    exact_p_power_exponent(ctx, q);
    BigInt m = 6 * (BigInt(q) - 1);
    if ((ctx.r - 1) % (2 * m) != 0)
        throw no_solution_error("sigma^(6(q-1)) = -1 has no solution: 12(q-1) does not divide r-1 "
                                "(r not sufficiently large for q = " + std::to_string(q) + ")");
    FieldElement g = primitive_root(ctx);
    FieldElement h = g.pow((ctx.r - 1) / (2 * m)); // order exactly 12(q-1)
    FieldElement h2 = h * h;
    FieldElement minus_one = -FieldElement::from_int(ctx, 1);
    std::vector<FieldElement> out;
    FieldElement cur = h;
    for (BigInt k = 0; k < m; ++k) {
        if (!(cur.pow(m) == minus_one)) throw internal_error("solve_sigma: candidate fails defining relation");
        out.push_back(cur);
        cur = cur * h2;
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.to_integer() < b.to_integer(); });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw internal_error("solve_sigma: duplicate solution");
    return out;
}

std::vector<FieldElement> solve_beta(const FieldCtx& ctx, unsigned long q) {
    unsigned long c = exact_p_power_exponent(ctx, q);
    if (ctx.s % c != 0) throw invalid_family_error("solve_beta requires c | s so that GF(q) embeds in GF(r)");
    unsigned long p = ctx.p, s = ctx.s;
    // columns: image of each power-basis element under beta -> beta^q + beta
    std::vector<std::vector<std::uint32_t>> col(s);
    for (unsigned long i = 0; i < s; ++i) {
        FieldElement b(ctx);
        std::vector<std::uint32_t> cv(s, 0);
        cv[i] = 1;
        b = FieldElement::from_coeffs(ctx, cv);
        FieldElement img = b.pow(BigInt(q)) + b;
        col[i] = img.coeffs();
    }
    // augmented Gaussian elimination over GF(p): A x = e_0 (the element 1)
    std::vector<std::vector<std::uint64_t>> m(s, std::vector<std::uint64_t>(s + 1, 0));
    for (unsigned long row = 0; row < s; ++row) {
        for (unsigned long i = 0; i < s; ++i) m[row][i] = col[i][row];
        m[row][s] = (row == 0) ? 1 : 0;
    }
    std::vector<long> pivot_of_col(s, -1);
    unsigned long rank = 0;
    for (unsigned long colj = 0; colj < s && rank < s; ++colj) {
        unsigned long sel = rank;
        while (sel < s && m[sel][colj] % p == 0) ++sel;
        if (sel == s) continue;
        std::swap(m[sel], m[rank]);
        std::uint64_t inv = mod_inverse(m[rank][colj] % p, p);
        for (auto& v : m[rank]) v = v * inv % p;
        for (unsigned long rr = 0; rr < s; ++rr) {
            if (rr == rank || m[rr][colj] % p == 0) continue;
            std::uint64_t f = m[rr][colj] % p;
            for (unsigned long k = 0; k <= s; ++k) m[rr][k] = (m[rr][k] + (p - f) * m[rank][k]) % p;
        }
        pivot_of_col[colj] = static_cast<long>(rank);
        ++rank;
    }
    for (unsigned long rr = rank; rr < s; ++rr)
        if (m[rr][s] % p != 0) throw internal_error("solve_beta: inconsistent linear system");
    // particular solution: free variables zero
    std::vector<std::uint32_t> particular(s, 0);
    for (unsigned long j = 0; j < s; ++j)
        if (pivot_of_col[j] >= 0) particular[j] = static_cast<std::uint32_t>(m[pivot_of_col[j]][s] % p);
    // kernel basis: one vector per free column
    std::vector<std::vector<std::uint32_t>> kernel;
    for (unsigned long j = 0; j < s; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<std::uint32_t> v(s, 0);
        v[j] = 1;
        for (unsigned long k = 0; k < s; ++k)
            if (pivot_of_col[k] >= 0)
                v[k] = static_cast<std::uint32_t>((p - m[pivot_of_col[k]][j] % p) % p);
        kernel.push_back(std::move(v));
    }
    BigInt expected = pow_bigint(BigInt(p), kernel.size());
    if (expected != q)
        throw internal_error("solve_beta: kernel dimension inconsistent with q (solution count " +
                             expected.get_str() + ", expected " + std::to_string(q) + ")");
    std::vector<FieldElement> out;
    std::vector<std::uint32_t> sel(kernel.size(), 0);
    FieldElement one = FieldElement::from_int(ctx, 1);
    while (true) {
        std::vector<std::uint32_t> coeffs = particular;
        for (size_t kidx = 0; kidx < kernel.size(); ++kidx) {
            if (sel[kidx] == 0) continue;
            for (unsigned long i = 0; i < s; ++i)
                coeffs[i] = static_cast<std::uint32_t>((coeffs[i] + static_cast<std::uint64_t>(sel[kidx]) * kernel[kidx][i]) % p);
        }
        FieldElement beta = FieldElement::from_coeffs(ctx, coeffs);
        if (!(beta.pow(BigInt(q)) + beta == one)) throw internal_error("solve_beta: candidate fails defining relation");
        out.push_back(beta);
        size_t i = sel.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++sel[i] < p) {
                done = false;
                break;
            }
            sel[i] = 0;
        }
        if (sel.empty() || done) break;
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.to_integer() < b.to_integer(); });
    return out;
}

} // namespace mwlat
