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
   Graded multiplication on the path space of Z^n.

   Two evaluations of the product p_i^l . p_j^m are provided:

   - the quantum shuffle sum over thin splits d in D_l^{l+m}; each summand is
     the concatenation of the brackets [(d a)_t . (d' b)_t], an arrow acted on
     by a vertex through the bimodule tables. shuffle_multiply_enumerated
     walks every d; ShuffleTable evaluates the same sum as a lattice-path
     recursion (a thin split is a monotone path from (0,0) to (l,m)), which
     is what makes large l + m tractable.

   - the closed form

       p_i^l . p_j^m = h^{jl} qq^{s (i + l') [m + j - (m+j)'] / n} [l+m choose l]_h p_{i+j}^{l+m},

     h = qq^{-s} lambda^{-1}, x' = x mod n.
*/

#ifndef MQG_SHUFFLE_HPP
#define MQG_SHUFFLE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mqg/bimodule.hpp"
#include "mqg/cyclotomic.hpp"
#include "mqg/quiver.hpp"

namespace mqg {

/// q-integers, q-factorials and Gaussian binomials at a fixed base h.
class GaussScalar {
   public:
    explicit GaussScalar(CycloNum hbar) : hbar_(std::move(hbar)) {}

    const CycloNum& hbar() const { return hbar_; }

    /// l_h = 1 + h + ... + h^{l-1}
    CycloNum integer(int l) const {
        CycloNum out(0), term(1);
        for (int k = 0; k < l; ++k) {
            out += term;
            term *= hbar_;
        }
        return out;
    }

    CycloNum factorial(int l) const {
        CycloNum out(1);
        for (int k = 1; k <= l; ++k) out *= integer(k);
        return out;
    }

    /// [a choose b]_h by the recursion [a,b] = [a-1,b-1] + h^b [a-1,b]; no division involved.
    CycloNum binomial(int a, int b) const {
        if (b < 0 || b > a) return CycloNum(0);
        std::lock_guard<std::mutex> lock(cache_->mu);
        grow(a);
        return cache_->rows[a][b];
    }

    /// [l+m choose l]_h
    CycloNum binomial_sum(int l, int m) const { return binomial(l + m, l); }

   private:
    struct Cache {
        std::mutex mu;
        std::vector<std::vector<CycloNum>> rows;
        std::vector<CycloNum> powers;
    };
    CycloNum hbar_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

    void grow(int a) const {
        auto& powers = cache_->powers;
        auto& rows = cache_->rows;
        while (static_cast<int>(powers.size()) <= a) powers.push_back(powers.empty() ? CycloNum(1) : powers.back() * hbar_);
        while (static_cast<int>(rows.size()) <= a) {
            int r = static_cast<int>(rows.size());
            std::vector<CycloNum> row(r + 1);
            row[0] = CycloNum(1);
            row[r] = CycloNum(1);
            for (int b = 1; b < r; ++b) row[b] = rows[r - 1][b - 1] + powers[b] * rows[r - 1][b];
            rows.push_back(std::move(row));
        }
    }
};

inline CycloNum gauss_binomial(const CycloNum& h, int l, int m) { return GaussScalar(h).binomial_sum(l, m); }

/// The path space of Z^n with the multiplication induced by an arrow bimodule.
class QuiverAlgebra {
   public:
    explicit QuiverAlgebra(ArrowBimodule bimodule)
        : bimodule_(std::move(bimodule)), gauss_(bimodule_.deformation()) {}

    const ArrowBimodule& bimodule() const { return bimodule_; }
    ArrowBimodule& mutable_bimodule() { return bimodule_; }
    const CocycleParams& params() const { return bimodule_.params(); }
    int n() const { return bimodule_.n(); }
    const GaussScalar& gauss() const { return gauss_; }
    CycloNum deformation() const { return gauss_.hbar(); }

   private:
    ArrowBimodule bimodule_;
    GaussScalar gauss_;
};

inline QuiverAlgebra make_quiver_algebra(int n, int s, long long q_exp) {
    CocycleParams p(n, s);
    return QuiverAlgebra(build_bimodule(p, p.q_from_exponent(q_exp)));
}

/// Scalar and target of one path product.
struct PathProduct {
    CycloNum coeff;
    Path path;
};

/// Closed-form product of two paths.
inline PathProduct closed_form_product(const QuiverAlgebra& A, const Path& a, const Path& b) {
    const CocycleParams& p = A.params();
    const int n = p.n(), s = p.s();
    const long long i = a.source, j = b.source, l = a.length, m = b.length;
    const long long lp = p.rem(l);
    const long long mj = m + j;
    const long long qq_exp = floor_mod(s * (i + lp) * ((mj - p.rem(mj)) / n), n);
    CycloNum c = A.deformation().pow(j * l) * CycloNum::root_of_unity(n, qq_exp) * A.gauss().binomial_sum(a.length, b.length);
    return {c, Path(n, i + j, a.length + b.length)};
}

namespace detail {

/// Bracket [arrow . vertex] or [vertex . arrow]; `arrow` is X_label.
inline const ActionEntry& bracket_right(const ArrowBimodule& B, long long arrow, long long vertex) {
    return B.right(arrow, vertex);
}
inline const ActionEntry& bracket_left(const ArrowBimodule& B, long long vertex, long long arrow) {
    return B.left(vertex, arrow);
}

inline void expect_arrow(const ArrowBimodule& B, const ActionEntry& e, long long position) {
    if (e.arrow != B.arrow_label(position))
        throw StructuralError("bracket result X_" + std::to_string(e.arrow) + " does not continue the product path");
}

}  // namespace detail

/// Product of two paths as the literal sum over all d in D_l^{l+m}.
inline PathProduct shuffle_multiply_enumerated(const QuiverAlgebra& A, const Path& a, const Path& b) {
    const ArrowBimodule& B = A.bimodule();
    const int n = A.n(), N = B.conductor();
    const int total = a.length + b.length;
    Path result(n, a.source + b.source, total);
    CyclicSum acc(N);
    for (const ThinSplit& split : thin_splits(a, total)) {
        // complement split of b: position t holds an arrow of b iff split.pattern[t] == 0
        long long exponent = 0;
        int consumed_b = 0;
        for (int t = 0; t < total; ++t) {
            const Path& piece = split.pieces[t];
            if (split.pattern[t]) {
                // [(d a)_t . (d' b)_t] = X_{piece target} . g^{current vertex of b}
                const ActionEntry& e = detail::bracket_right(B, piece.source + 1, b.source + consumed_b);
                detail::expect_arrow(B, e, result.source + t + 1);
                exponent += e.scalar.exponent;
            } else {
                const ActionEntry& e = detail::bracket_left(B, piece.source, b.source + consumed_b + 1);
                detail::expect_arrow(B, e, result.source + t + 1);
                exponent += e.scalar.exponent;
                ++consumed_b;
            }
        }
        acc.add_rotated(CyclicSum::unit(N), exponent);
    }
    return {acc.value(), result};
}

/// All products p_i^l . p_j^m with l + m <= max_total for fixed sources (i, j).
///
/// The thin split sum is a sum over monotone lattice paths; cell (k, k') accumulates
/// every partial split that has consumed k arrows of the left factor and k' of the right.
class ShuffleTable {
   public:
    ShuffleTable(const QuiverAlgebra& A, int i, int j, int max_total)
        : n_(A.n()), i_(i), j_(j), max_total_(max_total), cells_(static_cast<size_t>(max_total + 1) * (max_total + 1)) {
        const ArrowBimodule& B = A.bimodule();
        const int N = B.conductor();
        for (auto& c : cells_) c = CyclicSum(N);
        cell(0, 0) = CyclicSum::unit(N);
        for (int t = 0; t < max_total; ++t)
            for (int k = 0; k <= t; ++k) {
                int kp = t - k;
                const CyclicSum& here = cell(k, kp);
                // next arrow of the left factor, acted on from the right by the current vertex of the right factor
                const ActionEntry& r = detail::bracket_right(B, i + k + 1, j + kp);
                detail::expect_arrow(B, r, i + j + t + 1);
                cell(k + 1, kp).add_rotated(here, r.scalar.exponent);
                // next arrow of the right factor, acted on from the left by the current vertex of the left factor
                const ActionEntry& l = detail::bracket_left(B, i + k, j + kp + 1);
                detail::expect_arrow(B, l, i + j + t + 1);
                cell(k, kp + 1).add_rotated(here, l.scalar.exponent);
            }
    }

    int max_total() const { return max_total_; }

    PathProduct product(int l, int m) const {
        if (l < 0 || m < 0 || l + m > max_total_) throw ParameterError("lengths outside the shuffle table");
        return {cells_[static_cast<size_t>(l) * (max_total_ + 1) + m].value(), Path(n_, i_ + j_, l + m)};
    }

   private:
    int n_, i_, j_, max_total_;
    std::vector<CyclicSum> cells_;

    CyclicSum& cell(int k, int kp) { return cells_[static_cast<size_t>(k) * (max_total_ + 1) + kp]; }
};

/// Product of two paths by the thin split sum.
inline PathProduct shuffle_multiply(const QuiverAlgebra& A, const Path& a, const Path& b) {
    return ShuffleTable(A, a.source, b.source, a.length + b.length).product(a.length, b.length);
}

/// Bilinear extension of a path product rule.
template <class Rule>
PathVector multiply_with(const PathVector& x, const PathVector& y, Rule&& rule) {
    PathVector out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            PathProduct pr = rule(a, b);
            out.add(pr.path, pr.coeff * ca * cb);
        }
    return out;
}

inline PathVector shuffle_multiply(const QuiverAlgebra& A, const PathVector& x, const PathVector& y) {
    return multiply_with(x, y, [&](const Path& a, const Path& b) { return shuffle_multiply(A, a, b); });
}

inline PathVector multiply(const QuiverAlgebra& A, const PathVector& x, const PathVector& y) {
    return multiply_with(x, y, [&](const Path& a, const Path& b) { return closed_form_product(A, a, b); });
}

/// ((p.p).p)...p, k factors.
inline PathVector power_left(const QuiverAlgebra& A, const PathVector& p, int k) {
    if (k < 1) throw ParameterError("power exponent must be positive");
    PathVector out = p;
    for (int t = 1; t < k; ++t) out = multiply(A, out, p);
    return out;
}

/// p.(p.(...(p.p))), k factors.
inline PathVector power_right(const QuiverAlgebra& A, const PathVector& p, int k) {
    if (k < 1) throw ParameterError("power exponent must be positive");
    PathVector out = p;
    for (int t = 1; t < k; ++t) out = multiply(A, p, out);
    return out;
}

struct CrossCheckReport {
    bool passed = true;
    long long pairs_checked = 0;
    std::optional<Path> left, right;
    std::string shuffle_value, closed_value;
};

/// Compares the thin split sum against the closed form for every pair with l + m <= max_total_length.
inline CrossCheckReport cross_check(const QuiverAlgebra& A, int max_total_length) {
    CrossCheckReport rep;
    const int n = A.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ShuffleTable table(A, i, j, max_total_length);
            for (int l = 0; l <= max_total_length; ++l)
                for (int m = 0; l + m <= max_total_length; ++m) {
                    Path a(n, i, l), b(n, j, m);
                    PathProduct s = table.product(l, m);
                    PathProduct c = closed_form_product(A, a, b);
                    ++rep.pairs_checked;
                    if (!(s.path == c.path) || !(s.coeff == c.coeff)) {
                        rep.passed = false;
                        rep.left = a;
                        rep.right = b;
                        rep.shuffle_value = s.coeff.to_string();
                        rep.closed_value = c.coeff.to_string();
                        return rep;
                    }
                }
        }
    return rep;
}

}  // namespace mqg

#endif  // MQG_SHUFFLE_HPP
