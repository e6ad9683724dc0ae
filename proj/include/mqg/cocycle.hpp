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
   The 3-cocycles Phi_s on Z_n = <g>, the 2-cocycles sigma_s they induce on
   the centralizer of g, and the one-dimensional modules of the twisted group
   algebra C^{sigma_s} Z_n.

   The primitive n-th root qq is pinned to zeta_n. Every scalar lives in
   Q(zeta_{n^2}) when s != 0 and in Q(zeta_n) when s = 0.
*/

#ifndef MQG_COCYCLE_HPP
#define MQG_COCYCLE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"

namespace mqg {

class CocycleParams {
   public:
    CocycleParams(int n, int s) : n_(n), s_(s) {
        if (n < 2) throw ParameterError("cycle order n must be at least 2");
        if (s < 0 || s >= n) throw ParameterError("s must satisfy 0 <= s <= n-1");
    }

    int n() const { return n_; }
    int s() const { return s_; }

    /// The pinned primitive n-th root of unity.
    CycloNum qq() const { return CycloNum::root_of_unity(n_, 1); }

    /// Conductor of the field that holds q and all structure constants.
    int conductor() const { return s_ != 0 ? n_ * n_ : n_; }

    /// i' : remainder of i modulo n.
    int rem(long long i) const { return static_cast<int>(floor_mod(i, n_)); }

    /// Exponent of qq in Phi_s(g^i, g^j, g^k), arguments reduced mod n first.
    long long phi_exponent(long long i, long long j, long long k) const {
        long long a = rem(i), b = rem(j), c = rem(k);
        long long carry = (b + c - rem(b + c)) / n_;  // 0 or 1
        return floor_mod(s_ * a * carry, n_);
    }

    /// Phi_s as a root of unity at the working conductor.
    RootOfUnity phi_root(long long i, long long j, long long k) const {
        int N = conductor();
        return RootOfUnity(N, phi_exponent(i, j, k) * (N / n_));
    }

    /// Legal q exponents relative to zeta_{conductor()}: 1 + kn for s != 0, 0..n-1 for s = 0.
    std::vector<int> q_exponents() const {
        std::vector<int> out;
        for (int k = 0; k < n_; ++k) out.push_back(s_ != 0 ? 1 + k * n_ : k);
        return out;
    }

    bool is_legal_q_exponent(long long e) const {
        return s_ != 0 ? floor_mod(e, n_) == 1 : true;
    }

    CycloNum q_from_exponent(long long e) const {
        if (!is_legal_q_exponent(e))
            throw ParameterError("q = zeta_" + std::to_string(conductor()) + "^" + std::to_string(e) +
                                 " is not an n-th root of qq");
        return CycloNum::root_of_unity(conductor(), e);
    }

    /// q^n = qq when s != 0, q^n = 1 when s = 0.
    bool is_legal_q(const CycloNum& q) const {
        CycloNum qn = q.pow(n_);
        return s_ != 0 ? qn == qq() : qn.is_one();
    }

    /// The action scalar g |> X_1: q^s for s != 0, q itself for s = 0.
    CycloNum lambda_for(const CycloNum& q) const { return s_ != 0 ? q.pow(s_) : q; }

    /// The recurring scalar qq^{-s} lambda^{-1} (= qq^{-s} q^{-s} for s != 0).
    CycloNum deformation_for(const CycloNum& q) const {
        return (qq().pow(-s_) * lambda_for(q).inverse()).lifted(std::lcm(conductor(), q.conductor()));
    }

    friend bool operator==(const CocycleParams&, const CocycleParams&) = default;

   private:
    int n_;
    int s_;
};

/// Phi_s(g^i, g^j, g^k) = qq^{s i (j + k - (j+k)')/n}.
inline CycloNum phi(const CocycleParams& p, long long i, long long j, long long k) {
    return CycloNum::root_of_unity(p.n(), p.phi_exponent(i, j, k));
}

/// Dense table of a candidate 3-cochain on Z_n, index (i*n + j)*n + k.
struct PhiTable {
    int n = 0;
    std::vector<CycloNum> values;

    const CycloNum& operator()(long long i, long long j, long long k) const {
        return values[(floor_mod(i, n) * n + floor_mod(j, n)) * n + floor_mod(k, n)];
    }
    CycloNum& at(long long i, long long j, long long k) {
        return values[(floor_mod(i, n) * n + floor_mod(j, n)) * n + floor_mod(k, n)];
    }
};

inline PhiTable phi_table(const CocycleParams& p) {
    PhiTable t{p.n(), {}};
    t.values.reserve(static_cast<size_t>(p.n()) * p.n() * p.n());
    for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j)
            for (int k = 0; k < p.n(); ++k) t.values.push_back(phi(p, i, j, k));
    return t;
}

struct CocycleReport {
    bool passed = true;
    std::string failed_identity;
    std::optional<std::array<int, 4>> counterexample;
};

/// Pentagon identity on all (i,j,k,l) in Z_n^4 and normalization Phi(a,1,b) = 1.
inline CocycleReport pentagon_check(const PhiTable& t) {
    int n = t.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!t(a, 0, b).is_one()) return {false, "normalization", std::array<int, 4>{a, 0, b, 0}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    CycloNum lhs = t(i, j, k + l) * t(i + j, k, l);
                    CycloNum rhs = t(j, k, l) * t(i, j + k, l) * t(i, j, k);
                    if (!(lhs == rhs)) return {false, "pentagon", std::array<int, 4>{i, j, k, l}};
                }
    return {};
}

inline CocycleReport pentagon_check(const CocycleParams& p) { return pentagon_check(phi_table(p)); }

/// sigma_s(g^i, g^j) as the displayed five-factor ratio of Phi_s values.
inline CycloNum sigma(const CocycleParams& p, long long i, long long j) {
    CycloNum num = phi(p, i, j, 1) * phi(p, i + j, -j, -i) * phi(p, i, j + 1, -j);
    CycloNum den = phi(p, i + j + 1, -j, -i) * phi(p, i, j, -j);
    return num / den;
}

/// Scalar c with g^{*i} = c g^i in C^{sigma_s} Z_n, multiplying g * (g^{*(i-1)}).
inline CycloNum twisted_power(const CocycleParams& p, int i) {
    if (i < 1 || i > p.n()) throw ParameterError("twisted power index must lie in 1..n");
    CycloNum c(1);
    for (int k = 1; k < i; ++k) c *= sigma(p, 1, k);
    return c;
}

/// 2-cocycle identity sigma(i,j) sigma(i+j,k) = sigma(j,k) sigma(i,j+k), plus sigma(g,g) = qq^{-s}
/// and g^{*i} = qq^{-(i-1)s} g^i for 1 <= i <= n.
inline CocycleReport sigma_check(const CocycleParams& p) {
    int n = p.n();
    std::vector<CycloNum> tab(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tab[i * n + j] = sigma(p, i, j);
    auto sg = [&](long long i, long long j) -> const CycloNum& { return tab[p.rem(i) * n + p.rem(j)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!(sg(i, j) * sg(i + j, k) == sg(j, k) * sg(i, j + k)))
                    return {false, "sigma 2-cocycle", std::array<int, 4>{i, j, k, 0}};
    if (!(sg(1, 1) == p.qq().pow(-p.s()))) return {false, "sigma(g,g)", std::array<int, 4>{1, 1, 0, 0}};
    for (int i = 1; i <= n; ++i)
        if (!(twisted_power(p, i) == p.qq().pow(-static_cast<long long>(i - 1) * p.s())))
            return {false, "twisted power", std::array<int, 4>{i, 0, 0, 0}};
    return {};
}

/// One-dimensional module g |> X = lambda X of C^{sigma_s} Z_n.
struct OneDimModule {
    CycloNum lambda;
    CocycleParams params;
};

/// All n solutions of lambda^n = qq^s: zeta_{n^2}^{s + kn} for s != 0, zeta_n^k for s = 0.
inline std::vector<OneDimModule> one_dim_modules(const CocycleParams& p) {
    std::vector<OneDimModule> out;
    int n = p.n();
    for (int k = 0; k < n; ++k) {
        CycloNum lambda = p.s() != 0 ? CycloNum::root_of_unity(n * n, p.s() + static_cast<long long>(k) * n)
                                     : CycloNum::root_of_unity(n, k);
        out.push_back({lambda, p});
    }
    return out;
}

/// lambda^n X = g^{*n} |> X, where g^{*n} = c g^n = c (the unit acts trivially).
inline bool module_relation_holds(const OneDimModule& m) {
    CycloNum via_twist = twisted_power(m.params, m.params.n());
    return m.lambda.pow(m.params.n()) == via_twist && via_twist == m.params.qq().pow(m.params.s());
}

}  // namespace mqg

#endif  // MQG_COCYCLE_HPP
