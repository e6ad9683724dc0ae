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

/*
   Corepresentations of M(n,s,q) as representations of the cyclic quiver with
   all paths of length d set to zero.

   A right comodule V splits as V = sum_i V_i with V_i the g^i-isotypic part
   (coaction v -> v (x) g^i in degree 0). The degree-1 coaction component along
   the arrow p_i^1 is a map A_i : V_i -> V_{i+1}; the degree-l component along
   p_i^l is the composite A_{i+l-1} ... A_i.
*/

#ifndef MQG_COREP_HPP
#define MQG_COREP_HPP

#include <cmath>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"
#include "mqg/linalg.hpp"
#include "mqg/majid_algebra.hpp"

namespace mqg {

struct CycleModule {
    int n = 2;
    int d = 1;
    std::vector<int> dims;        // dims[i] = dim V_i
    std::vector<Matrix> arrows;   // arrows[i] : V_i -> V_{i+1}, shape dims[i+1] x dims[i]

    int vertex(long long i) const { return static_cast<int>(floor_mod(i, n)); }
    int total_dimension() const {
        int t = 0;
        for (int x : dims) t += x;
        return t;
    }

    /// A_{i+k-1} ... A_i : V_i -> V_{i+k}; the identity for k = 0.
    Matrix composite(long long i, int k) const {
        Matrix m = Matrix::identity(dims[vertex(i)]);
        for (int t = 0; t < k; ++t) m = arrows[vertex(i + t)] * m;
        return m;
    }

    friend bool operator==(const CycleModule& a, const CycleModule& b) {
        return a.n == b.n && a.d == b.d && a.dims == b.dims && a.arrows == b.arrows;
    }
};

/// Shape and nilpotency checks; throws NotAComodule on a violated relation.
inline void validate(const CycleModule& X) {
    if (X.n < 1 || X.d < 1) throw ParameterError("module needs n >= 1 and d >= 1");
    if (static_cast<int>(X.dims.size()) != X.n || static_cast<int>(X.arrows.size()) != X.n)
        throw FormatError("module needs one dimension and one arrow matrix per vertex");
    for (int i = 0; i < X.n; ++i) {
        if (X.dims[i] < 0) throw FormatError("negative vertex dimension");
        const Matrix& a = X.arrows[i];
        if (a.rows() != X.dims[X.vertex(i + 1)] || a.cols() != X.dims[i])
            throw FormatError("arrow matrix at vertex " + std::to_string(i) + " has the wrong shape");
    }
    for (int i = 0; i < X.n; ++i)
        if (!X.composite(i, X.d).is_zero())
            throw NotAComodule("composite of " + std::to_string(X.d) + " arrows from vertex " + std::to_string(i) +
                               " is nonzero");
}

inline CycleModule zero_module(int n, int d) {
    CycleModule X{n, d, std::vector<int>(n, 0), {}};
    for (int i = 0; i < n; ++i) X.arrows.emplace_back(0, 0);
    return X;
}

/// I(i, l): basis b_0..b_{l-1}, b_k at vertex i+k, arrows b_k -> b_{k+1}. Top at i, socle at i+l-1.
struct IntervalModule {
    int top = 0;
    int length = 1;
    friend auto operator<=>(const IntervalModule&, const IntervalModule&) = default;
    std::string to_string() const { return "I(" + std::to_string(top) + "," + std::to_string(length) + ")"; }
};

inline IntervalModule parse_interval(const std::string& text) {
    static const std::regex re(R"(\s*I\(\s*(-?\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw FormatError("cannot parse interval literal '" + text + "'");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

/// Direct sum; basis of each vertex is X's basis followed by Y's.
inline CycleModule direct_sum(const CycleModule& X, const CycleModule& Y) {
    if (X.n != Y.n || X.d != Y.d) throw ParameterError("direct sum of modules over different quivers");
    CycleModule S{X.n, X.d, {}, {}};
    for (int i = 0; i < X.n; ++i) S.dims.push_back(X.dims[i] + Y.dims[i]);
    for (int i = 0; i < X.n; ++i) {
        int j = X.vertex(i + 1);
        Matrix m(S.dims[j], S.dims[i]);
        for (int r = 0; r < X.dims[j]; ++r)
            for (int c = 0; c < X.dims[i]; ++c) m(r, c) = X.arrows[i](r, c);
        for (int r = 0; r < Y.dims[j]; ++r)
            for (int c = 0; c < Y.dims[i]; ++c) m(X.dims[j] + r, X.dims[i] + c) = Y.arrows[i](r, c);
        S.arrows.push_back(std::move(m));
    }
    return S;
}

inline CycleModule interval_module(int n, int d, const IntervalModule& I) {
    if (I.length < 1 || I.length > d) throw ParameterError("interval length must lie in 1..d");
    const int top = static_cast<int>(floor_mod(I.top, n));
    // position k of the interval sits at vertex top+k; record which local index it gets there
    std::vector<int> dims(n, 0);
    std::vector<std::pair<int, int>> where(I.length);
    for (int k = 0; k < I.length; ++k) {
        int v = (top + k) % n;
        where[k] = {v, dims[v]++};
    }
    CycleModule X{n, d, dims, {}};
    for (int i = 0; i < n; ++i) X.arrows.emplace_back(dims[(i + 1) % n], dims[i]);
    for (int k = 0; k + 1 < I.length; ++k) X.arrows[where[k].first](where[k + 1].second, where[k].second) = CycloNum(1);
    return X;
}

inline CycleModule simple_module(int n, int d, int i) { return interval_module(n, d, {i, 1}); }

/// The n*d interval modules: the complete list of indecomposables.
inline std::vector<IntervalModule> indecomposables(int n, int d) {
    if (n < 1 || d < 1) throw ParameterError("indecomposables need n >= 1 and d >= 1");
    std::vector<IntervalModule> out;
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= d; ++l) out.push_back({i, l});
    return out;
}

/// r(i, k): rank of the composite of k arrows starting at vertex i.
inline int composite_rank(const CycleModule& X, long long i, int k) {
    if (k == 0) return X.dims[X.vertex(i)];
    if (k >= X.d) return 0;
    return rank(X.composite(i, k));
}

/// Krull-Remak-Schmidt multiplicities from composite ranks:
///   mult(i, l) = [r(i, l-1) - r(i, l)] - [r(i-1, l) - r(i-1, l+1)].
inline std::map<IntervalModule, int> decompose(const CycleModule& X) {
    validate(X);
    const int n = X.n, d = X.d;
    std::vector<std::vector<int>> r(n, std::vector<int>(d + 2, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= d + 1; ++k) r[i][k] = composite_rank(X, i, k);
    std::map<IntervalModule, int> out;
    for (int i = 0; i < n; ++i) {
        int prev = static_cast<int>(floor_mod(i - 1, n));
        for (int l = 1; l <= d; ++l) {
            int m = (r[i][l - 1] - r[i][l]) - (r[prev][l] - r[prev][l + 1]);
            if (m < 0) throw StructuralError("negative multiplicity from the rank formula");
            if (m > 0) out[{i, l}] = m;
        }
    }
    std::vector<int> rebuilt(n, 0);
    for (const auto& [I, m] : out)
        for (int k = 0; k < I.length; ++k) rebuilt[(I.top + k) % n] += m;
    if (rebuilt != X.dims) throw StructuralError("decomposition does not reproduce the dimension vector");
    return out;
}

/// dim Hom(X, Y): solutions (f_i : X_i -> Y_i) of f_{i+1} A_i = B_i f_i.
inline int hom_dimension(const CycleModule& X, const CycleModule& Y) {
    if (X.n != Y.n) throw ParameterError("Hom between modules over different quivers");
    const int n = X.n;
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + Y.dims[i] * X.dims[i];
    int equations = 0;
    for (int i = 0; i < n; ++i) equations += Y.dims[(i + 1) % n] * X.dims[i];
    Matrix sys(equations, offset[n]);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const Matrix& A = X.arrows[i];
        const Matrix& B = Y.arrows[i];
        // entry (r, c) of f_j A_i - B_i f_i, with f_i stored row-major at offset[i]
        for (int r = 0; r < Y.dims[j]; ++r)
            for (int c = 0; c < X.dims[i]; ++c, ++row) {
                for (int k = 0; k < X.dims[j]; ++k)
                    if (!A(k, c).is_zero()) sys(row, offset[j] + r * X.dims[j] + k) += A(k, c);
                for (int k = 0; k < Y.dims[i]; ++k)
                    if (!B(r, k).is_zero()) sys(row, offset[i] + k * X.dims[i] + c) -= B(r, k);
            }
    }
    return offset[n] - rank(sys);
}

/// Base change X -> P X: arrows become P_{i+1} A_i P_i^{-1}.
inline CycleModule conjugate(const CycleModule& X, const std::vector<Matrix>& P) {
    CycleModule Y = X;
    for (int i = 0; i < X.n; ++i) Y.arrows[i] = P[X.vertex(i + 1)] * X.arrows[i] * inverse(P[i]);
    return Y;
}

/// Dimensions of the radical layers rad^k X / rad^{k+1} X, summed over vertices.
inline std::vector<int> radical_layers(const CycleModule& X) {
    validate(X);
    std::vector<int> layers;
    int prev = X.total_dimension();
    for (int k = 1; prev > 0; ++k) {
        // rad^k X at vertex v is the image of the composite of k arrows ending at v
        int cur = 0;
        for (int v = 0; v < X.n; ++v) cur += composite_rank(X, v - k, k);
        layers.push_back(prev - cur);
        prev = cur;
    }
    return layers;
}

/// Uniserial iff every radical layer is one-dimensional.
inline bool uniserial_check(const CycleModule& X) {
    std::vector<int> layers = radical_layers(X);
    if (layers.empty()) return false;
    for (int x : layers)
        if (x != 1) return false;
    return true;
}

/// Hom(P, -) is exact on every sequence 0 -> rad I(j,l) -> I(j,l) -> S_j -> 0.
inline bool is_projective(const CycleModule& P) {
    const int n = P.n, d = P.d;
    for (int j = 0; j < n; ++j)
        for (int l = 1; l <= d; ++l) {
            int whole = hom_dimension(P, interval_module(n, d, {j, l}));
            int top = hom_dimension(P, simple_module(n, d, j));
            int rad = l > 1 ? hom_dimension(P, interval_module(n, d, {j + 1, l - 1})) : 0;
            if (whole != top + rad) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Tensor products

/// V_X (x) V_Y with the coaction x_0 (x) y_0 (x) x_1 y_1.
///
/// The part at vertex c is sum_{a+b=c} X_a (x) Y_b, ordered by a, each block in Kronecker order.
/// Its arrow is sum_{a+b=c} [coeff(p_a^1 g^b) (A_a (x) 1) + coeff(g^a p_b^1) (1 (x) B_b)].
inline CycleModule comodule_tensor(const MajidAlgebra& M, const CycleModule& X, const CycleModule& Y) {
    validate(X);
    validate(Y);
    const int n = M.n(), d = M.d();
    if (X.n != n || Y.n != n || X.d != d || Y.d != d)
        throw ParameterError("tensor factors are not comodules over this algebra");
    CycleModule T{n, d, std::vector<int>(n, 0), {}};
    std::vector<std::vector<int>> block(n, std::vector<int>(n, 0));  // block[c][a]: offset of X_a (x) Y_{c-a}
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a) {
            block[c][a] = T.dims[c];
            T.dims[c] += X.dims[a] * Y.dims[floor_mod(c - a, n)];
        }
    for (int c = 0; c < n; ++c) T.arrows.emplace_back(T.dims[(c + 1) % n], T.dims[c]);
    if (d < 2) return T;

    auto coefficient = [&](int x, int y, int expected) {
        const BasisTerm& t = M.product(x, y);
        if (t.target < 0) return CycloNum(0);
        if (t.target != expected) throw StructuralError("degree-one product lands off the expected arrow");
        return t.coeff;
    };
    for (int c = 0; c < n; ++c) {
        const int next = (c + 1) % n;
        for (int a = 0; a < n; ++a) {
            const int b = static_cast<int>(floor_mod(c - a, n));
            const int arrow_c = M.index(c, 1);
            const Matrix idY = Matrix::identity(Y.dims[b]);
            const Matrix idX = Matrix::identity(X.dims[a]);
            // (A_a (x) 1): X_a (x) Y_b -> X_{a+1} (x) Y_b
            CycloNum cx = coefficient(M.index(a, 1), M.index(b, 0), arrow_c);
            if (!cx.is_zero()) {
                Matrix part = kron(X.arrows[a], idY).scaled(cx);
                int a1 = (a + 1) % n;
                for (int r = 0; r < part.rows(); ++r)
                    for (int k = 0; k < part.cols(); ++k)
                        if (!part(r, k).is_zero()) T.arrows[c](block[next][a1] + r, block[c][a] + k) += part(r, k);
            }
            // (1 (x) B_b): X_a (x) Y_b -> X_a (x) Y_{b+1}
            CycloNum cy = coefficient(M.index(a, 0), M.index(b, 1), arrow_c);
            if (!cy.is_zero()) {
                Matrix part = kron(idX, Y.arrows[b]).scaled(cy);
                for (int r = 0; r < part.rows(); ++r)
                    for (int k = 0; k < part.cols(); ++k)
                        if (!part(r, k).is_zero()) T.arrows[c](block[next][a] + r, block[c][a] + k) += part(r, k);
            }
        }
    }
    return T;
}

/// Degree-l coaction component of X (x) Y along p_c^l, assembled directly from the structure
/// constants: sum_k (A^(k) (x) B^(l-k)) coeff(p_a^k p_b^{l-k}). For a comodule it equals the
/// composite of l tensor arrows.
inline Matrix tensor_coaction_component(const MajidAlgebra& M, const CycleModule& X, const CycleModule& Y, int c,
                                        int l) {
    const int n = M.n();
    std::vector<int> dims(n, 0);
    std::vector<std::vector<int>> block(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int a = 0; a < n; ++a) {
            block[v][a] = dims[v];
            dims[v] += X.dims[a] * Y.dims[floor_mod(v - a, n)];
        }
    const int cc = static_cast<int>(floor_mod(c, n)), target = static_cast<int>(floor_mod(c + l, n));
    Matrix out(dims[target], dims[cc]);
    if (l >= M.d()) return out;
    for (int a = 0; a < n; ++a) {
        const int b = static_cast<int>(floor_mod(cc - a, n));
        for (int k = 0; k <= l; ++k) {
            const BasisTerm& t = M.product(M.index(a, k), M.index(b, l - k));
            if (t.target < 0 || t.coeff.is_zero()) continue;
            if (t.target != M.index(cc, l)) throw StructuralError("product lands off the expected path");
            Matrix part = kron(X.composite(a, k), Y.composite(b, l - k)).scaled(t.coeff);
            const int a2 = static_cast<int>(floor_mod(a + k, n));
            for (int r = 0; r < part.rows(); ++r)
                for (int q = 0; q < part.cols(); ++q)
                    if (!part(r, q).is_zero()) out(block[target][a2] + r, block[cc][a] + q) += part(r, q);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grothendieck ring and Frobenius-Perron dimensions

/// Fusion of simple classes: fusion[k](j, i) = multiplicity of S_j in S_k (x) S_i.
struct FusionData {
    int n = 0;
    std::vector<std::vector<std::vector<long long>>> fusion;
};

inline FusionData compute_fusion(const MajidAlgebra& M) {
    const int n = M.n(), d = M.d();
    FusionData F{n, std::vector(n, std::vector(n, std::vector<long long>(n, 0)))};
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            CycleModule T = comodule_tensor(M, simple_module(n, d, k), simple_module(n, d, i));
            for (int j = 0; j < n; ++j) F.fusion[k][j][i] = T.dims[j];
        }
    return F;
}

/// Class of a module in the simple basis: its composition multiplicities.
inline std::vector<long long> grothendieck_class(const CycleModule& X) {
    return std::vector<long long>(X.dims.begin(), X.dims.end());
}

struct FPDimension {
    double value = 0;                     // power iteration
    std::optional<long long> certificate;  // exact value when the row and column sums are constant
    int iterations = 0;
};

/// Perron eigenvalue of left multiplication by the class x = sum_k x_k [S_k].
inline FPDimension fp_dimension(const FusionData& F, const std::vector<long long>& x) {
    const int n = F.n;
    if (static_cast<int>(x.size()) != n) throw ParameterError("class must have one coordinate per simple");
    std::vector<std::vector<long long>> L(n, std::vector<long long>(n, 0));
    for (int k = 0; k < n; ++k) {
        if (x[k] < 0) throw ParameterError("class coordinates must be non-negative");
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) L[j][i] += x[k] * F.fusion[k][j][i];
    }

    FPDimension out;
    long long row0 = 0;
    for (int i = 0; i < n; ++i) row0 += L[0][i];
    bool constant = true;
    for (int j = 0; j < n && constant; ++j) {
        long long row = 0, col = 0;
        for (int i = 0; i < n; ++i) {
            row += L[j][i];
            col += L[i][j];
        }
        constant = row == row0 && col == row0;
    }
    if (constant) out.certificate = row0;

    // iterate with L + I so that a periodic L still has a unique dominant eigenvalue
    std::vector<double> v(n, 1.0 / n), w(n);
    double lambda = 0;
    for (int it = 1; it <= 100000; ++it) {
        double norm = 0;
        for (int j = 0; j < n; ++j) {
            double acc = v[j];
            for (int i = 0; i < n; ++i) acc += static_cast<double>(L[j][i]) * v[i];
            w[j] = acc;
            norm += acc;
        }
        if (norm == 0) {
            out.iterations = it;
            lambda = 1;
            break;
        }
        double change = 0;
        for (int j = 0; j < n; ++j) {
            double nv = w[j] / norm;
            change = std::max(change, std::abs(nv - v[j]));
            v[j] = nv;
        }
        double next = norm;  // v was normalized to unit l1 norm, so ||(L+I)v||_1 -> Perron value + 1
        out.iterations = it;
        bool done = change < 1e-15 && std::abs(next - lambda) < 1e-13;
        lambda = next;
        if (done) break;
    }
    out.value = lambda - 1;
    return out;
}

}  // namespace mqg

#endif  // MQG_COREP_HPP
