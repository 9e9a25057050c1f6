// mwlat: Mordell-Weil lattice sphere packing toolkit
// Copyright 2026 The mwlat Authors.
// SPDX-License-Identifier: Apache-2.0
#include "mwlat/lattice.hpp"

#include "mwlat/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace mwlat {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec out(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational out(0);
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

Rational determinant(Mat m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv_pivot = 1 / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] * inv_pivot;
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

} // namespace

BigInt GramMatrix::scale() const {
    BigInt out = 1;
    for (const auto& row : entries)
        for (const auto& v : row) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den().get_mpz_t());
    return out;
}

GramMatrix gram_from_entries(std::vector<std::vector<Rational>> entries) {
    size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n) throw internal_error("Gram matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (entries[i][i] < 0) throw internal_error("Gram diagonal entry is negative");
        for (size_t j = i + 1; j < n; ++j)
            if (entries[i][j] != entries[j][i]) throw internal_error("Gram matrix is not symmetric");
    }
    return GramMatrix{std::move(entries)};
}

GramMatrix gram_from_pair_values(size_t n, const std::function<Rational(size_t, size_t)>& pair) {
    std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) entries[i][j] = entries[j][i] = pair(i, j);
    return gram_from_entries(std::move(entries));
}

GramMatrix gram_from_points(const std::vector<CurvePoint>& points, const PairFn& pair,
                            const PointNegFn& negate, unsigned threads) {
    // canonical order, drop exact duplicates
    std::vector<CurvePoint> reps(points.begin(), points.end());
    std::sort(reps.begin(), reps.end(), point_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    // drop the later element of each P/-P pair
    std::vector<CurvePoint> kept;
    kept.reserve(reps.size());
    for (const auto& P : reps) {
        if (P.is_identity()) continue; // contributes nothing to the lattice
        CurvePoint nP = negate(P);
        bool negative_comes_first =
            std::binary_search(reps.begin(), reps.end(), nP, point_less) && point_less(nP, P);
        if (!negative_comes_first) kept.push_back(P);
    }
    size_t n = kept.size();
    std::vector<std::vector<Rational>> entries(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::pair<size_t, size_t>> tasks;
    tasks.reserve(n * (n + 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) tasks.emplace_back(i, j);
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<size_t>(tasks.size(), 1));
    if (workers <= 1) {
        for (const auto& [i, j] : tasks) entries[i][j] = pair(kept[i], kept[j]);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto run = [&]() {
            try {
                while (true) {
                    size_t k = next.fetch_add(1);
                    if (k >= tasks.size()) break;
                    auto [i, j] = tasks[k];
                    entries[i][j] = pair(kept[i], kept[j]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) entries[j][i] = entries[i][j];
    return gram_from_entries(std::move(entries));
}

namespace {

struct HnfAccumulator {
    size_t n;
    std::vector<std::vector<BigInt>> pivot_rows; // pivot_rows[j] empty = no pivot at column j
    explicit HnfAccumulator(size_t n_) : n(n_), pivot_rows(n_) {}

    void insert(std::vector<BigInt> v) {
        for (size_t j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            if (pivot_rows[j].empty()) {
                if (v[j] < 0)
                    for (auto& e : v) e = -e;
                pivot_rows[j] = std::move(v);
                return;
            }
            BigInt a = pivot_rows[j][j], b = v[j];
            BigInt g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            BigInt af = a / g, bf = b / g;
            std::vector<BigInt> combined(n), reduced(n);
            for (size_t k = 0; k < n; ++k) {
                combined[k] = x * pivot_rows[j][k] + y * v[k];
                reduced[k] = af * v[k] - bf * pivot_rows[j][k];
            }
            pivot_rows[j] = std::move(combined);
            v = std::move(reduced); // v[j] is now 0
        }
    }

    // reduce entries above each pivot into [0, pivot)
    void normalize() {
        for (size_t j = 0; j < n; ++j) {
            if (pivot_rows[j].empty()) continue;
            for (size_t i = 0; i < j; ++i) {
                if (pivot_rows[i].empty()) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), pivot_rows[i][j].get_mpz_t(), pivot_rows[j][j].get_mpz_t());
                if (q == 0) continue;
                for (size_t k = 0; k < n; ++k) pivot_rows[i][k] -= q * pivot_rows[j][k];
            }
        }
    }
};

} // namespace

LatticeBasis saturate(const GramMatrix& g) {
    size_t N = g.n_gen();
    if (N == 0) throw internal_error("saturate: empty generator set");
    const auto& G = g.entries;

    // rank-revealing selection: keep generators with positive residual norm
    std::vector<size_t> selected;
    Mat ginv; // inverse of the selected principal submatrix
    for (size_t idx = 0; idx < N; ++idx) {
        size_t k = selected.size();
        Vec gv(k);
        for (size_t a = 0; a < k; ++a) gv[a] = G[selected[a]][idx];
        Vec w = mat_vec(ginv, gv);
        Rational res = G[idx][idx] - dot(gv, w);
        if (res < 0) throw internal_error("saturate: Gram matrix is not positive semidefinite");
        if (res == 0) continue;
        // bordered inverse update
        Mat next(k + 1, Vec(k + 1, Rational(0)));
        Rational inv_res = 1 / res;
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) next[a][b] = ginv[a][b] + w[a] * w[b] * inv_res;
        for (size_t a = 0; a < k; ++a) {
            next[a][k] = -w[a] * inv_res;
            next[k][a] = next[a][k];
        }
        next[k][k] = inv_res;
        ginv = std::move(next);
        selected.push_back(idx);
    }
    size_t n = selected.size();
    if (n == 0) throw internal_error("saturate: all generators have zero norm (rank 0)");

    // coordinates of every generator in the selected basis
    std::vector<Vec> coords(N);
    BigInt denom_lcm = 1;
    for (size_t idx = 0; idx < N; ++idx) {
        Vec gv(n);
        for (size_t a = 0; a < n; ++a) gv[a] = G[selected[a]][idx];
        coords[idx] = mat_vec(ginv, gv);
        Rational res = G[idx][idx] - dot(gv, coords[idx]);
        if (res != 0) throw internal_error("saturate: generator escapes the selected span (Gram not PSD)");
        for (const auto& c : coords[idx])
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }

    // Hermite-style triangularization of the scaled integer coordinate rows
    HnfAccumulator hnf(n);
    for (size_t idx = 0; idx < N; ++idx) {
        std::vector<BigInt> row(n);
        for (size_t a = 0; a < n; ++a) {
            Rational scaled = coords[idx][a] * Rational(denom_lcm);
            if (scaled.get_den() != 1) throw internal_error("saturate: scaling failed to clear denominators");
            row[a] = scaled.get_num();
        }
        hnf.insert(std::move(row));
    }
    for (size_t j = 0; j < n; ++j)
        if (hnf.pivot_rows[j].empty())
            throw internal_error("saturate: triangular form lost a pivot column");
    hnf.normalize();

    // basis gram = (H/D) G_B (H/D)^T
    Mat T(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            T[i][j] = Rational(hnf.pivot_rows[i][j], denom_lcm);
            T[i][j].canonicalize();
        }
    Mat GB(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) GB[i][j] = G[selected[i]][selected[j]];
    Mat tmp(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (T[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) tmp[i][j] += T[i][k] * GB[k][j];
        }
    Mat BG(n, Vec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v(0);
            for (size_t k = 0; k < n; ++k) v += tmp[i][k] * T[j][k];
            BG[i][j] = v;
        }

    LatticeBasis out;
    out.rank = n;
    out.gram = std::move(BG);
    out.det = determinant(out.gram);
    if (out.det <= 0) throw internal_error("saturate: basis determinant not positive");
    return out;
}

RadicalValue covolume(const LatticeBasis& b) { return RadicalValue(Rational(1), b.det); }

DensityReport normalized_center_density(long n, const Rational& nmin, const Rational& det) {
    if (n < 1) throw internal_error("normalized_center_density: rank must be >= 1");
    if (nmin <= 0 || det <= 0) throw internal_error("normalized_center_density: nonpositive inputs");
    DensityReport out;
    out.n = n;
    out.nmin = nmin;
    out.det = det;
    out.rho_squared = nmin / 4;
    Rational rational_part = pow_rational(out.rho_squared, n / 2);
    Rational radicand = (n % 2 != 0) ? out.rho_squared / det : Rational(1) / det;
    out.delta = RadicalValue(rational_part, radicand);
    out.density = density_from_normalized(n, out.delta);
    return out;
}

namespace {

BigInt round_nearest(const Rational& x) {
    Rational shifted = x + Rational(1, 2);
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return out;
}

// exact Gram-Schmidt data: B[i] = |b_i*|^2, mu[i][j] for j < i
struct Gso {
    Mat mu;
    Vec B;
};

Gso compute_gso(const Mat& G) {
    size_t n = G.size();
    Gso out{Mat(n, Vec(n, Rational(0))), Vec(n, Rational(0))};
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < i; ++j) {
            Rational v = G[i][j];
            for (size_t k = 0; k < j; ++k) v -= out.mu[i][k] * out.mu[j][k] * out.B[k];
            if (out.B[j] == 0) throw internal_error("GSO hit a zero norm (basis not positive definite)");
            out.mu[i][j] = v / out.B[j];
        }
        Rational v = G[i][i];
        for (size_t k = 0; k < i; ++k) v -= out.mu[i][k] * out.mu[i][k] * out.B[k];
        if (v <= 0) throw internal_error("basis Gram is not positive definite");
        out.B[i] = v;
    }
    return out;
}

// exact LLL (delta = 3/4) acting on the Gram matrix; returns the unimodular
// transform rows such that reduced = U G U^T
void lll_reduce(Mat& G, std::vector<std::vector<BigInt>>& U) {
    size_t n = G.size();
    U.assign(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;
    auto row_op = [&](size_t dst, size_t src, const BigInt& q) {
        // b_dst -= q b_src
        Rational qr(q);
        for (size_t k = 0; k < n; ++k) U[dst][k] -= q * U[src][k];
        for (size_t k = 0; k < n; ++k) G[dst][k] -= qr * G[src][k];
        for (size_t k = 0; k < n; ++k) G[k][dst] -= qr * G[k][src];
    };
    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(U[a], U[b]);
        std::swap(G[a], G[b]);
        for (size_t k = 0; k < n; ++k) std::swap(G[k][a], G[k][b]);
    };
    const Rational delta(3, 4);
    size_t k = 1;
    Gso gso = compute_gso(G);
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            BigInt q = round_nearest(gso.mu[k][j]);
            if (q != 0) {
                row_op(k, j, q);
                gso = compute_gso(G);
            }
        }
        if (gso.B[k] >= (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.B[k - 1]) {
            ++k;
        } else {
            swap_rows(k, k - 1);
            gso = compute_gso(G);
            k = std::max<size_t>(k - 1, 1);
        }
    }
}

} // namespace

ShortestVectorResult shortest_vector(const LatticeBasis& b) {
    size_t n = b.rank;
    if (n == 0) throw internal_error("shortest_vector: empty basis");
    if (n > kShortestVectorMaxRank)
        throw internal_error("shortest_vector: rank " + std::to_string(n) +
                             " exceeds the enumeration guard (" + std::to_string(kShortestVectorMaxRank) +
                             "); use the analytic bound instead");
    Mat G = b.gram;
    std::vector<std::vector<BigInt>> U;
    lll_reduce(G, U);
    Gso gso = compute_gso(G);

    // initial bound: the smallest reduced basis norm
    Rational best = G[0][0];
    std::vector<BigInt> best_x(n, 0);
    best_x[0] = 1;
    for (size_t i = 1; i < n; ++i)
        if (G[i][i] < best) {
            best = G[i][i];
            std::fill(best_x.begin(), best_x.end(), 0);
            best_x[i] = 1;
        }

    // Fincke-Pohst depth-first search, exact arithmetic throughout
    std::vector<BigInt> x(n, 0);
    std::vector<Rational> partial(n + 1, Rational(0));
    auto search = [&](auto&& self, size_t level) -> void {
        size_t i = level - 1;
        // center_i = -sum_{j > i} mu[j][i] x_j
        Rational c(0);
        for (size_t j = i + 1; j < n; ++j) c -= gso.mu[j][i] * Rational(x[j]);
        Rational budget = best - partial[i + 1];
        // enumerate x_i outward from the rounded center while
        // B_i (x_i - c)^2 <= budget
        BigInt start = round_nearest(c);
        for (int dir = 0; dir < 2; ++dir) {
            BigInt xi = dir == 0 ? start : start - 1;
            while (true) {
                Rational diff = Rational(xi) - c;
                Rational term = gso.B[i] * diff * diff;
                if (term > budget) break;
                x[i] = xi;
                partial[i] = partial[i + 1] + term;
                if (i == 0) {
                    if (partial[0] > 0 && partial[0] < best) {
                        best = partial[0];
                        best_x = x;
                    }
                } else {
                    self(self, i);
                }
                if (dir == 0)
                    xi += 1;
                else
                    xi -= 1;
            }
        }
        x[i] = 0;
    };
    partial[n] = 0;
    search(search, n);

    ShortestVectorResult out;
    out.norm = best;
    out.coeffs.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (size_t j = 0; j < n; ++j) acc += best_x[j] * U[j][i];
        if (!acc.fits_slong_p()) throw internal_error("shortest vector coefficients overflow long");
        out.coeffs[i] = acc.get_si();
    }
    return out;
}

bool is_e8(const LatticeBasis& b) {
    if (b.rank != 8) return false;
    if (b.det != 1) return false;
    for (size_t i = 0; i < 8; ++i) {
        for (size_t j = 0; j < 8; ++j)
            if (b.gram[i][j].get_den() != 1) return false;
        if (b.gram[i][i].get_num() % 2 != 0) return false;
    }
    return shortest_vector(b).norm == 2;
}

std::vector<std::vector<double>> euclidean_embedding(const LatticeBasis& b) {
    size_t n = b.rank;
    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            double v = b.gram[i][j].get_d();
            for (size_t k = 0; k < j; ++k) v -= L[i][k] * L[j][k];
            if (i == j) {
                if (v <= 0)
                    throw internal_error("embedding pivot not positive despite exact rank guarantee");
                L[i][i] = std::sqrt(v);
            } else {
                L[i][j] = v / L[j][j];
            }
        }
    }
    return L;
}

} // namespace mwlat
