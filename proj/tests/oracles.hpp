/*
   Copyright 2026 The mqg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code paths it is used to check.

#ifndef MQG_TESTS_ORACLES_HPP
#define MQG_TESTS_ORACLES_HPP

#include <algorithm>
#include <bitset>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "mqg/corep.hpp"
#include "mqg/cyclotomic.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic by Moebius products and naive long division.

using IntPoly = std::vector<mpz_class>;

inline int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    if (n > 1) result = -result;
    return result;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Exact division by a monic polynomial; the remainder must vanish.
inline IntPoly poly_exact_div(IntPoly a, const IntPoly& b) {
    IntPoly q(a.size() - b.size() + 1, 0);
    for (int k = static_cast<int>(a.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
        mpz_class c = a[k];
        int shift = k - static_cast<int>(b.size()) + 1;
        q[shift] = c;
        for (size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    }
    return q;
}

/// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}.
inline IntPoly cyclotomic(int N) {
    IntPoly num{1}, den{1};
    for (int d = 1; d <= N; ++d) {
        if (N % d) continue;
        int mu = moebius(N / d);
        if (mu == 0) continue;
        IntPoly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        if (mu == 1)
            num = poly_mul(num, f);
        else
            den = poly_mul(den, f);
    }
    return poly_exact_div(num, den);
}

/// Remainder of a rational polynomial (common denominator kept separately) modulo Phi_N.
inline std::vector<mpq_class> reduce(std::vector<mpq_class> a, int N) {
    IntPoly phi = cyclotomic(N);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= deg; --k) {
        mpq_class c = a[k];
        for (int t = 0; t <= deg; ++t) a[k - deg + t] -= c * phi[t];
    }
    a.resize(deg, 0);
    return a;
}

/// Coefficients of x in the power basis, from the public accessors.
inline std::vector<mpq_class> coefficients(const mqg::CycloNum& x) {
    std::vector<mpq_class> out;
    for (int k = 0; k < x.degree(); ++k) out.push_back(x.coefficient(k));
    return out;
}

/// Evaluation of a power-basis vector at exp(2 pi i k / N).
inline std::complex<double> evaluate(const std::vector<mpq_class>& c, int N, int k = 1) {
    std::complex<double> z = std::polar(1.0, 2 * M_PI * k / N), acc = 0, p = 1;
    for (const auto& x : c) {
        acc += x.get_d() * p;
        p *= z;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Gaussian binomials.

/// [a choose b]_h through the q-Lucas theorem: h primitive of order D.
inline long long lucas_integer_factor(int a, int b, int D) {
    // binom(a div D, b div D) as an integer
    long long A = a / D, B = b / D;
    if (B < 0 || B > A) return 0;
    long long r = 1;
    for (long long k = 1; k <= B; ++k) r = r * (A - B + k) / k;
    return r;
}

// ---------------------------------------------------------------------------
// Representations of the bound cycle quiver over F_2.

struct F2Rep {
    int n = 0;
    std::vector<int> dims;
    std::vector<std::vector<uint32_t>> arrows;  // arrows[i][col] = column as a bitmask over V_{i+1}
};

inline uint32_t apply(const std::vector<uint32_t>& cols, uint32_t v) {
    uint32_t out = 0;
    for (size_t c = 0; c < cols.size(); ++c)
        if (v >> c & 1u) out ^= cols[c];
    return out;
}

/// Bitset Gaussian elimination; rows are bitmasks over `vars` unknowns. Returns the solution space basis.
inline std::vector<uint64_t> f2_nullspace(std::vector<uint64_t> rows, int vars) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < vars && r < static_cast<int>(rows.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(rows.size()) && !(rows[p] >> c & 1ull)) ++p;
        if (p == static_cast<int>(rows.size())) continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] >> c & 1ull)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(vars, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<uint64_t> basis;
    for (int f = 0; f < vars; ++f) {
        if (is_pivot[f]) continue;
        uint64_t v = 1ull << f;
        for (size_t k = 0; k < pivot_col.size(); ++k)
            if (rows[k] >> f & 1ull) v |= 1ull << pivot_col[k];
        basis.push_back(v);
    }
    return basis;
}

/// Hom(X, Y) over F_2 as a list of basis vectors; unknown (i, r, c) is entry (r, c) of f_i.
struct F2Hom {
    std::vector<int> offset;
    std::vector<uint64_t> basis;
};

inline F2Hom f2_hom(const F2Rep& X, const F2Rep& Y) {
    const int n = X.n;
    F2Hom h;
    h.offset.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) h.offset[i + 1] = h.offset[i] + Y.dims[i] * X.dims[i];
    std::vector<uint64_t> rows;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        // (f_j A_i - B_i f_i)(r, c) = sum_k f_j(r,k) A_i(k,c) + sum_k B_i(r,k) f_i(k,c)
        for (int r = 0; r < Y.dims[j]; ++r)
            for (int c = 0; c < X.dims[i]; ++c) {
                uint64_t row = 0;
                for (int k = 0; k < X.dims[j]; ++k)
                    if (X.arrows[i][c] >> k & 1u) row ^= 1ull << (h.offset[j] + r * X.dims[j] + k);
                for (int k = 0; k < Y.dims[i]; ++k)
                    if (Y.arrows[i][k] >> r & 1u) row ^= 1ull << (h.offset[i] + k * X.dims[i] + c);
                rows.push_back(row);
            }
    }
    h.basis = f2_nullspace(rows, h.offset[n]);
    return h;
}

/// Per-vertex square matrices (row bitmasks) of a Hom element between modules with equal dims.
inline std::vector<std::vector<uint32_t>> f2_blocks(const F2Hom& h, uint64_t v, const std::vector<int>& dims) {
    std::vector<std::vector<uint32_t>> out(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) {
        out[i].assign(dims[i], 0);
        for (int r = 0; r < dims[i]; ++r)
            for (int c = 0; c < dims[i]; ++c)
                if (v >> (h.offset[i] + r * dims[i] + c) & 1ull) out[i][r] |= 1u << c;
    }
    return out;
}

inline int f2_rank(std::vector<uint32_t> rows) {
    int r = 0;
    for (int bit = 0; bit < 32; ++bit) {
        int p = r;
        while (p < static_cast<int>(rows.size()) && !(rows[p] >> bit & 1u)) ++p;
        if (p == static_cast<int>(rows.size())) continue;
        std::swap(rows[p], rows[r]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] >> bit & 1u)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

inline std::vector<uint32_t> f2_square(const std::vector<uint32_t>& m) {
    const int k = static_cast<int>(m.size());
    std::vector<uint32_t> out(k, 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (m[r] >> c & 1u) out[r] ^= m[c];
    return out;
}

/// Local endomorphism ring: every element is invertible or nilpotent.
inline bool f2_indecomposable(const F2Rep& X) {
    int total = 0;
    for (int x : X.dims) total += x;
    if (total == 0) return false;
    F2Hom h = f2_hom(X, X);
    const int e = static_cast<int>(h.basis.size());
    for (uint64_t mask = 1; mask < (1ull << e); ++mask) {
        uint64_t v = 0;
        for (int t = 0; t < e; ++t)
            if (mask >> t & 1ull) v ^= h.basis[t];
        auto blocks = f2_blocks(h, v, X.dims);
        bool invertible = true, nilpotent = true;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (X.dims[i] == 0) continue;
            if (f2_rank(blocks[i]) != X.dims[i]) invertible = false;
        }
        // nilpotent: (f)^{total} = 0 vertexwise
        for (size_t i = 0; i < blocks.size() && nilpotent; ++i) {
            auto p = blocks[i];
            for (int k = 1; k < total; k *= 2) p = f2_square(p);
            for (auto row : p)
                if (row) nilpotent = false;
        }
        if (!invertible && !nilpotent) return false;
    }
    return true;
}

inline bool f2_isomorphic(const F2Rep& X, const F2Rep& Y) {
    if (X.dims != Y.dims) return false;
    F2Hom h = f2_hom(X, Y);
    const int e = static_cast<int>(h.basis.size());
    for (uint64_t mask = 1; mask < (1ull << e); ++mask) {
        uint64_t v = 0;
        for (int t = 0; t < e; ++t)
            if (mask >> t & 1ull) v ^= h.basis[t];
        auto blocks = f2_blocks(h, v, X.dims);
        bool ok = true;
        for (size_t i = 0; i < blocks.size() && ok; ++i)
            if (X.dims[i] > 0 && f2_rank(blocks[i]) != X.dims[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

/// All composites of d arrows vanish.
inline bool f2_bound(const F2Rep& X, int d) {
    for (int i = 0; i < X.n; ++i)
        for (int c = 0; c < X.dims[i]; ++c) {
            uint32_t v = 1u << c;
            for (int t = 0; t < d && v; ++t) v = apply(X.arrows[(i + t) % X.n], v);
            if (v) return false;
        }
    return true;
}

/// Isomorphism classes of indecomposable representations with total dimension <= max_total.
inline std::vector<F2Rep> f2_indecomposables(int n, int d, int max_total) {
    std::vector<F2Rep> found;
    std::vector<int> dims(n, 0);
    std::function<void(int, int)> over_dims = [&](int v, int left) {
        if (v == n) {
            int total = 0;
            for (int x : dims) total += x;
            if (total == 0) return;
            int bits = 0;
            for (int i = 0; i < n; ++i) bits += dims[i] * dims[(i + 1) % n];
            for (uint64_t code = 0; code < (1ull << bits); ++code) {
                F2Rep X{n, dims, std::vector<std::vector<uint32_t>>(n)};
                uint64_t rest = code;
                for (int i = 0; i < n; ++i) {
                    int rows = dims[(i + 1) % n];
                    for (int c = 0; c < dims[i]; ++c) {
                        X.arrows[i].push_back(static_cast<uint32_t>(rest & ((1ull << rows) - 1)));
                        rest >>= rows;
                    }
                }
                if (!f2_bound(X, d) || !f2_indecomposable(X)) continue;
                bool fresh = true;
                for (const auto& Y : found)
                    if (f2_isomorphic(X, Y)) {
                        fresh = false;
                        break;
                    }
                if (fresh) found.push_back(std::move(X));
            }
            return;
        }
        for (int k = 0; k <= left; ++k) {
            dims[v] = k;
            over_dims(v + 1, left - k);
        }
        dims[v] = 0;
    };
    over_dims(0, max_total);
    return found;
}

// ---------------------------------------------------------------------------
// Decomposition by matching Hom dimensions against all interval multisets.

/// Every multiset of intervals whose Hom dimensions from each interval agree with those of X.
inline std::vector<std::map<mqg::IntervalModule, int>> hom_matching_decompositions(const mqg::CycleModule& X) {
    const int n = X.n, d = X.d;
    auto intervals = mqg::indecomposables(n, d);
    std::vector<mqg::CycleModule> modules;
    for (const auto& I : intervals) modules.push_back(mqg::interval_module(n, d, I));
    const int K = static_cast<int>(intervals.size());
    std::vector<int> target(K);
    for (int a = 0; a < K; ++a) target[a] = mqg::hom_dimension(modules[a], X);
    std::vector<std::vector<int>> h(K, std::vector<int>(K));
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) h[a][b] = mqg::hom_dimension(modules[a], modules[b]);

    std::vector<std::map<mqg::IntervalModule, int>> out;
    std::vector<int> mult(K, 0), left = X.dims, homs(K, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == K) {
            if (std::any_of(left.begin(), left.end(), [](int x) { return x != 0; })) return;
            if (homs != target) return;
            std::map<mqg::IntervalModule, int> m;
            for (int a = 0; a < K; ++a)
                if (mult[a]) m[intervals[a]] = mult[a];
            out.push_back(m);
            return;
        }
        rec(k + 1);
        const auto& I = intervals[k];
        int added = 0;
        while (true) {
            bool fits = true;
            for (int t = 0; t < I.length; ++t)
                if (--left[(I.top + t) % n] < 0) fits = false;
            for (int a = 0; a < K; ++a) homs[a] += h[a][k];
            ++mult[k];
            ++added;
            bool over = !fits;
            for (int a = 0; a < K && !over; ++a)
                if (homs[a] > target[a]) over = true;
            if (over) break;
            rec(k + 1);
        }
        for (int r = 0; r < added; ++r) {
            for (int t = 0; t < I.length; ++t) ++left[(I.top + t) % n];
            for (int a = 0; a < K; ++a) homs[a] -= h[a][k];
        }
        mult[k] = 0;
    };
    rec(0);
    return out;
}

/// Random invertible integer matrix: product of unit triangular factors.
inline mqg::Matrix random_invertible(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    mqg::Matrix L = mqg::Matrix::identity(k), U = mqg::Matrix::identity(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i > j) L(i, j) = mqg::CycloNum(coef(rng));
            if (i < j) U(i, j) = mqg::CycloNum(coef(rng));
        }
    return L * U;
}

}  // namespace oracle

#endif  // MQG_TESTS_ORACLES_HPP
