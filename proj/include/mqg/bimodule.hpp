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
   The (C Z_n, Phi_s)-Majid bimodule on the arrow space of Z^n.

   X_i (1 <= i <= n) is the arrow g^{i-1} -> g^i and lies in the isotypic
   component ^{g^i}M^{g^{i-1}}. The generator acts by

       g.X_i = X_{i+1} (i < n),   g.X_n = qq^s X_1,   X_i.g = h X_{i+1},

   with h = qq^{-s} lambda^{-1}. The actions of g^a for every a are
   materialized from these through the quasi-associativity rules

       e.(f.m) = Phi(e,f,u)/Phi(e,f,v) (ef).m
       (m.e).f = Phi(v,e,f)/Phi(u,e,f) m.(ef)         m in ^uM^v.

   Every action scalar is a root of unity and is stored as an exponent of
   zeta_N, N the working conductor.
*/

#ifndef MQG_BIMODULE_HPP
#define MQG_BIMODULE_HPP

#include <string>
#include <vector>

#include "mqg/cocycle.hpp"
#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"

namespace mqg {

/// Result of acting on an arrow: scalar * X_arrow.
struct ActionEntry {
    int arrow = 1;  // 1..n
    RootOfUnity scalar;
    friend bool operator==(const ActionEntry&, const ActionEntry&) = default;
};

class ArrowBimodule {
   public:
    ArrowBimodule(CocycleParams params, CycloNum q, int conductor, std::vector<ActionEntry> left,
                  std::vector<ActionEntry> right)
        : params_(params), q_(std::move(q)), conductor_(conductor), left_(std::move(left)), right_(std::move(right)) {}

    const CocycleParams& params() const { return params_; }
    int n() const { return params_.n(); }
    const CycloNum& q() const { return q_; }
    int conductor() const { return conductor_; }

    CycloNum lambda() const { return params_.lambda_for(q_); }
    /// h = qq^{-s} q^{-s}; the base of every Gaussian binomial downstream.
    CycloNum deformation() const { return params_.deformation_for(q_).lifted(conductor_); }

    /// g^a . X_i
    const ActionEntry& left(long long a, long long i) const { return left_[index(a, i)]; }
    /// X_i . g^a
    const ActionEntry& right(long long i, long long a) const { return right_[index(a, i)]; }

    ActionEntry& mutable_left(long long a, long long i) { return left_[index(a, i)]; }
    ActionEntry& mutable_right(long long i, long long a) { return right_[index(a, i)]; }

    /// Arrow labels are read modulo n into 1..n.
    int arrow_label(long long i) const { return static_cast<int>(floor_mod(i - 1, n())) + 1; }

   private:
    CocycleParams params_;
    CycloNum q_;
    int conductor_;
    std::vector<ActionEntry> left_;   // index a*n + (i-1)
    std::vector<ActionEntry> right_;  // index a*n + (i-1)

    size_t index(long long a, long long i) const {
        return static_cast<size_t>(floor_mod(a, n()) * n() + arrow_label(i) - 1);
    }
};

/// Builds the full action tables from the generator action with g |> X_1 = lambda X_1.
inline ArrowBimodule build_bimodule(const CocycleParams& p, const CycloNum& q) {
    if (!p.is_legal_q(q))
        throw ParameterError("q = " + q.to_string() + " is not a legal parameter for n = " + std::to_string(p.n()) +
                             ", s = " + std::to_string(p.s()));
    const int n = p.n();
    const int N = std::lcm(p.conductor(), q.conductor());
    const long long scale = N / n;  // qq = zeta_N^scale

    // h as an exponent of zeta_N
    CycloNum h = p.deformation_for(q).lifted(N);
    long long h_exp = -1;
    for (long long e = 0; e < N; ++e)
        if (CycloNum::root_of_unity(N, e) == h) {
            h_exp = e;
            break;
        }
    if (h_exp < 0) throw StructuralError("deformation parameter is not a root of unity");

    auto phi_exp = [&](long long i, long long j, long long k) { return p.phi_exponent(i, j, k) * scale; };

    std::vector<ActionEntry> left(static_cast<size_t>(n) * n), right(static_cast<size_t>(n) * n);
    auto at = [n](long long a, int i) { return static_cast<size_t>(floor_mod(a, n) * n + i - 1); };
    for (int i = 1; i <= n; ++i) {
        left[at(0, i)] = {i, RootOfUnity(N, 0)};
        right[at(0, i)] = {i, RootOfUnity(N, 0)};
    }
    // g^a.X_i = Phi(g, g^{a-1}, g^{i-1}) / Phi(g, g^{a-1}, g^i) * g.(g^{a-1}.X_i)
    for (int a = 1; a < n; ++a)
        for (int i = 1; i <= n; ++i) {
            const ActionEntry& prev = left[at(a - 1, i)];
            int next = prev.arrow < n ? prev.arrow + 1 : 1;
            long long gen = prev.arrow < n ? 0 : p.s() * scale;
            long long e = prev.scalar.exponent + gen + phi_exp(1, a - 1, i - 1) - phi_exp(1, a - 1, i);
            left[at(a, i)] = {next, RootOfUnity(N, e)};
        }
    // X_i.g^a = Phi(g^i, g^{a-1}, g) / Phi(g^{i-1}, g^{a-1}, g) * (X_i.g^{a-1}).g
    for (int a = 1; a < n; ++a)
        for (int i = 1; i <= n; ++i) {
            const ActionEntry& prev = right[at(a - 1, i)];
            int next = prev.arrow < n ? prev.arrow + 1 : 1;
            long long e = prev.scalar.exponent + h_exp + phi_exp(i, a - 1, 1) - phi_exp(i - 1, a - 1, 1);
            right[at(a, i)] = {next, RootOfUnity(N, e)};
        }
    return ArrowBimodule(p, q, N, std::move(left), std::move(right));
}

/// g |> X_1 = (g.X_1).g^{-1}: the projective-representation scalar recovered from the tables.
inline CycloNum recovered_lambda(const ArrowBimodule& b) {
    const ActionEntry& gx = b.left(1, 1);
    const ActionEntry& back = b.right(gx.arrow, b.n() - 1);
    if (back.arrow != 1) throw StructuralError("(g.X_1).g^{-1} is not a multiple of X_1");
    return (gx.scalar * back.scalar).value();
}

struct BimoduleReport {
    bool passed = true;
    std::string failed_identity;
    int e = 0, f = 0, arrow = 0;
};

/// Quasi-associativity of both actions and the mixed rule, on every (e, f, X_i), plus the
/// bicomodule-morphism property of both structure maps.
inline BimoduleReport quasi_axiom_check(const ArrowBimodule& b) {
    const CocycleParams& p = b.params();
    const int n = b.n();
    auto ph = [&](long long i, long long j, long long k) { return phi(p, i, j, k); };
    auto val = [](const ActionEntry& x) { return x.scalar.value(); };

    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            for (int i = 1; i <= n; ++i) {
                const int u = i, v = i - 1;  // X_i in ^{g^u}M^{g^v}
                // bicomodule morphisms: g^e.X_i in ^{g^{e+u}}M^{g^{e+v}}, X_i.g^f in ^{g^{u+f}}M^{g^{v+f}}
                if (b.left(e, i).arrow != b.arrow_label(i + e)) return {false, "left action not a bicomodule map", e, f, i};
                if (b.right(i, f).arrow != b.arrow_label(i + f))
                    return {false, "right action not a bicomodule map", e, f, i};

                // e.(f.m) = Phi(e,f,u)/Phi(e,f,v) (ef).m
                {
                    const ActionEntry& inner = b.left(f, i);
                    const ActionEntry& outer = b.left(e, inner.arrow);
                    const ActionEntry& joint = b.left(e + f, i);
                    if (outer.arrow != joint.arrow ||
                        !(val(inner) * val(outer) * ph(e, f, v) == ph(e, f, u) * val(joint)))
                        return {false, "left quasi-associativity", e, f, i};
                }
                // (m.e).f = Phi(v,e,f)/Phi(u,e,f) m.(ef)
                {
                    const ActionEntry& inner = b.right(i, e);
                    const ActionEntry& outer = b.right(inner.arrow, f);
                    const ActionEntry& joint = b.right(i, e + f);
                    if (outer.arrow != joint.arrow ||
                        !(val(inner) * val(outer) * ph(u, e, f) == ph(v, e, f) * val(joint)))
                        return {false, "right quasi-associativity", e, f, i};
                }
                // (e.m).f = Phi(e,v,f)/Phi(e,u,f) e.(m.f)
                {
                    const ActionEntry& l1 = b.left(e, i);
                    const ActionEntry& r1 = b.right(l1.arrow, f);
                    const ActionEntry& r2 = b.right(i, f);
                    const ActionEntry& l2 = b.left(e, r2.arrow);
                    if (r1.arrow != l2.arrow ||
                        !(val(l1) * val(r1) * ph(e, u, f) == ph(e, v, f) * val(r2) * val(l2)))
                        return {false, "mixed quasi-associativity", e, f, i};
                }
            }
    return {};
}

}  // namespace mqg

#endif  // MQG_BIMODULE_HPP
