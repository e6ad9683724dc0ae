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
   The finite-dimensional Majid algebra M(n,s,q): the truncation of the path
   algebra of Z^n at length d = ord(h), h = qq^{-s} lambda^{-1}.

   Basis element p_i^l has index l*n + i. The reassociator, alpha and beta are
   functionals that vanish unless every argument is group-like.
*/

#ifndef MQG_MAJID_ALGEBRA_HPP
#define MQG_MAJID_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mqg/cocycle.hpp"
#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"
#include "mqg/quiver.hpp"
#include "mqg/shuffle.hpp"

namespace mqg {

/// coeff * basis[target]; target < 0 encodes the zero product.
struct BasisTerm {
    CycloNum coeff;
    int target = -1;
    friend bool operator==(const BasisTerm& a, const BasisTerm& b) {
        return a.target == b.target && a.coeff == b.coeff;
    }
};

struct AlgebraHeader {
    int n = 2;
    int s = 0;
    long long q_exp = 0;
    int conductor = 2;
    int d = 1;
};

class MajidAlgebra {
   public:
    /// Assembles an algebra from explicit tables (as read back from an export).
    MajidAlgebra(AlgebraHeader h, std::vector<BasisTerm> mult, std::vector<BasisTerm> antipode,
                 std::vector<CycloNum> alpha, std::vector<CycloNum> beta, std::vector<CycloNum> phi)
        : header_(h), state_(std::make_shared<State>()) {
        check_header();
        const size_t dim = static_cast<size_t>(this->dim());
        if (mult.size() != dim * dim) throw FormatError("multiplication table has the wrong size");
        if (antipode.size() != dim) throw FormatError("antipode table has the wrong size");
        if (alpha.size() != static_cast<size_t>(h.n) || beta.size() != static_cast<size_t>(h.n))
            throw FormatError("alpha/beta tables must have one entry per group-like");
        if (phi.size() != static_cast<size_t>(h.n) * h.n * h.n) throw FormatError("reassociator table has the wrong size");
        for (const auto& t : mult)
            if (t.target >= static_cast<int>(dim)) throw FormatError("product target outside the basis");
        for (const auto& t : antipode)
            if (t.target >= static_cast<int>(dim)) throw FormatError("antipode target outside the basis");
        state_->mult = std::move(mult);
        state_->antipode = std::move(antipode);
        std::call_once(state_->mult_once, [] {});
        std::call_once(state_->antipode_once, [] {});
        alpha_ = std::move(alpha);
        beta_ = std::move(beta);
        phi_ = std::move(phi);
    }

    const AlgebraHeader& header() const { return header_; }
    int n() const { return header_.n; }
    int s() const { return header_.s; }
    long long q_exp() const { return header_.q_exp; }
    int conductor() const { return header_.conductor; }
    int d() const { return header_.d; }
    int dim() const { return header_.n * header_.d; }

    CocycleParams params() const { return CocycleParams(n(), s()); }
    CycloNum q() const { return CycloNum::root_of_unity(conductor(), q_exp()); }

    int index(const Path& p) const {
        if (p.cycle_size != n() || p.length >= d()) throw ParameterError(p.to_string() + " is not a basis element");
        return p.length * n() + p.source;
    }
    int index(long long i, int l) const { return index(Path(n(), i, l)); }
    Path basis(int idx) const { return Path(n(), idx % n(), idx / n()); }
    bool is_grouplike(int idx) const { return idx < n(); }

    /// basis[a] * basis[b]
    const BasisTerm& product(int a, int b) const {
        ensure_mult();
        return state_->mult[static_cast<size_t>(a) * dim() + b];
    }
    /// S(basis[a])
    const BasisTerm& antipode(int a) const {
        ensure_antipode();
        return state_->antipode[a];
    }

    /// Reassociator on basis triples; zero unless all three are group-like.
    CycloNum phi(int a, int b, int c) const {
        if (!is_grouplike(a) || !is_grouplike(b) || !is_grouplike(c)) return CycloNum(0);
        return phi_[(static_cast<size_t>(a) * n() + b) * n() + c];
    }
    /// Convolution inverse of the reassociator; it is pointwise inverse on group-likes.
    CycloNum phi_inverse(int a, int b, int c) const {
        if (!is_grouplike(a) || !is_grouplike(b) || !is_grouplike(c)) return CycloNum(0);
        return phi(a, b, c).inverse();
    }
    CycloNum alpha(int a) const { return is_grouplike(a) ? alpha_[a] : CycloNum(0); }
    CycloNum beta(int a) const { return is_grouplike(a) ? beta_[a] : CycloNum(0); }
    int epsilon(int a) const { return is_grouplike(a) ? 1 : 0; }

    const std::vector<CycloNum>& alpha_table() const { return alpha_; }
    const std::vector<CycloNum>& beta_table() const { return beta_; }
    const std::vector<CycloNum>& phi_table() const { return phi_; }

    /// Overwrites one structure constant (materializing the table first).
    void set_product(int a, int b, BasisTerm t) {
        ensure_mult();
        detach();
        state_->mult[static_cast<size_t>(a) * dim() + b] = std::move(t);
    }
    void set_antipode(int a, BasisTerm t) {
        ensure_antipode();
        detach();
        state_->antipode[a] = std::move(t);
    }

   private:
    friend MajidAlgebra build_truncated(int, int, long long, int);

    struct Generator {
        std::vector<CycloNum> roots;                  // zeta_N^e, 0 <= e < N
        std::vector<std::vector<CycloNum>> binomial;  // [l][m] = [l+m choose l]_h, l, m < d
        long long h_exp = 0;
    };

    struct State {
        std::once_flag mult_once, antipode_once;
        std::vector<BasisTerm> mult;
        std::vector<BasisTerm> antipode;
        std::shared_ptr<const Generator> gen;
    };

    AlgebraHeader header_;
    std::shared_ptr<State> state_;
    std::vector<CycloNum> alpha_, beta_, phi_;

    explicit MajidAlgebra(AlgebraHeader h) : header_(h), state_(std::make_shared<State>()) { check_header(); }

    void check_header() const {
        if (header_.n < 2) throw ParameterError("M(n,s,q) requires n >= 2");
        CocycleParams p(header_.n, header_.s);
        if (header_.conductor != p.conductor()) throw FormatError("conductor does not match (n, s)");
        if (!p.is_legal_q_exponent(header_.q_exp)) throw ParameterError("illegal q exponent");
        if (header_.d < 1) throw FormatError("truncation length must be positive");
    }

    /// The closed-form product on two basis elements.
    BasisTerm generated_product(int a, int b) const {
        const Generator& g = *state_->gen;
        const int n = this->n(), N = conductor();
        const Path pa = basis(a), pb = basis(b);
        const int l = pa.length, m = pb.length;
        if (l + m >= d()) return {CycloNum(0), -1};
        const CycloNum& binom = g.binomial[l][m];
        if (binom.is_zero()) return {CycloNum(0), -1};
        const long long i = pa.source, j = pb.source, mj = m + j;
        const long long qq_exp = floor_mod(static_cast<long long>(s()) * (i + l % n) * ((mj - mj % n) / n), n);
        const long long e = floor_mod(g.h_exp * j * l + qq_exp * (N / n), N);
        return {g.roots[e] * binom, index(i + j, l + m)};
    }

    void ensure_mult() const {
        std::call_once(state_->mult_once, [this] {
            const int D = dim();
            std::vector<BasisTerm> table(static_cast<size_t>(D) * D);
            for (int a = 0; a < D; ++a)
                for (int b = 0; b < D; ++b) table[static_cast<size_t>(a) * D + b] = generated_product(a, b);
            state_->mult = std::move(table);
        });
    }

    void ensure_antipode() const;

    /// Copy-on-write before a mutation so that copies made earlier keep their tables.
    void detach() {
        auto fresh = std::make_shared<State>();
        fresh->mult = state_->mult;
        fresh->antipode = state_->antipode;
        fresh->gen = state_->gen;
        std::call_once(fresh->mult_once, [] {});
        if (!fresh->antipode.empty()) std::call_once(fresh->antipode_once, [] {});
        state_ = std::move(fresh);
    }
};

/// d such that the truncation at length d is closed: the multiplicative order of h.
inline int natural_truncation(int n, int s, long long q_exp) {
    CocycleParams p(n, s);
    auto ord = mult_order(p.deformation_for(p.q_from_exponent(q_exp)));
    if (!ord) throw StructuralError("deformation parameter has infinite order");
    return static_cast<int>(*ord);
}

/// Builds the truncation of the path algebra at length d; fails with StructuralError when some
/// product of two basis elements has a nonzero component of length >= d.
inline MajidAlgebra build_truncated(int n, int s, long long q_exp, int d) {
    if (n < 2) throw ParameterError("M(n,s,q) requires n >= 2");
    CocycleParams p(n, s);
    CycloNum q = p.q_from_exponent(q_exp);
    if (d < 1) throw ParameterError("truncation length must be positive");
    const int N = p.conductor();
    MajidAlgebra M(AlgebraHeader{n, s, floor_mod(q_exp, N), N, d});

    auto gen = std::make_shared<MajidAlgebra::Generator>();
    CycloNum h = p.deformation_for(q).lifted(N);
    gen->h_exp = -1;
    for (int e = 0; e < N; ++e) {
        gen->roots.push_back(CycloNum::root_of_unity(N, e));
        if (gen->roots.back() == h) gen->h_exp = e;
    }
    if (gen->h_exp < 0) throw StructuralError("deformation parameter is not an N-th root of unity");

    GaussScalar gauss(h);
    for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m)
            if (l + m >= d && !gauss.binomial_sum(l, m).is_zero())
                throw StructuralError("truncation at length " + std::to_string(d) + " is not closed: p(0," +
                                      std::to_string(l) + ") * p(0," + std::to_string(m) + ") has coefficient " +
                                      gauss.binomial_sum(l, m).to_string() + " on a path of length " +
                                      std::to_string(l + m));
    gen->binomial.assign(d, std::vector<CycloNum>(d));
    for (int l = 0; l < d; ++l)
        for (int m = 0; l + m < d; ++m) gen->binomial[l][m] = gauss.binomial_sum(l, m);
    M.state_->gen = std::move(gen);

    for (int a = 0; a < n; ++a) {
        M.alpha_.push_back(CycloNum(1));
        M.beta_.push_back(phi(p, a, -a, a).inverse());
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) M.phi_.push_back(phi(p, a, b, c).lifted(N));
    }
    return M;
}

inline MajidAlgebra build(int n, int s, long long q_exp) {
    return build_truncated(n, s, q_exp, natural_truncation(n, s, q_exp));
}

/// Same, with q given as a field element.
inline MajidAlgebra build(int n, int s, const CycloNum& q) {
    CocycleParams p(n, s);
    if (!p.is_legal_q(q)) throw ParameterError("q = " + q.to_string() + " is not a legal parameter");
    const int N = p.conductor();
    for (int e = 0; e < N; ++e)
        if (CycloNum::root_of_unity(N, e) == q) return build(n, s, e);
    throw ParameterError("q does not lie in Q(zeta_" + std::to_string(N) + ")");
}

// ---------------------------------------------------------------------------
// Elements as sparse combinations of basis indices.

using Element = std::map<int, CycloNum>;

inline void accumulate(Element& out, int idx, const CycloNum& c) {
    if (idx < 0 || c.is_zero()) return;
    auto [it, fresh] = out.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

inline bool element_equal(const Element& a, const Element& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || !(it->second == v)) return false;
    }
    return true;
}

inline Element unit_element(const CycloNum& c) {
    Element e;
    accumulate(e, 0, c);
    return e;
}

/// Comultiplication of a basis element into legs of basis indices (top leg first).
inline std::vector<std::vector<int>> basis_splits(const MajidAlgebra& M, int a, int legs) {
    std::vector<std::vector<int>> out;
    for (const auto& pieces : split_into(M.basis(a), legs)) {
        std::vector<int> idx;
        for (const Path& p : pieces) idx.push_back(M.index(p));
        out.push_back(std::move(idx));
    }
    return out;
}

struct VerificationReport {
    bool passed = true;
    std::string failed_identity;
    std::vector<std::string> witness;
    long long checks = 0;

    static VerificationReport failure(std::string what, std::vector<std::string> w) {
        VerificationReport r;
        r.passed = false;
        r.failed_identity = std::move(what);
        r.witness = std::move(w);
        return r;
    }
};

inline std::string basis_name(const MajidAlgebra& M, int idx) { return M.basis(idx).to_string(); }

/// Quasi-associativity, unit, pentagon with normalization, and multiplicativity of the comultiplication
/// and counit, over every basis element, pair and triple.
inline VerificationReport verify_quasi_bialgebra(const MajidAlgebra& M) {
    VerificationReport rep;
    const int D = M.dim(), n = M.n();
    auto name = [&](int i) { return basis_name(M, i); };

    // unit
    for (int a = 0; a < D; ++a) {
        ++rep.checks;
        for (const BasisTerm* t : {&M.product(0, a), &M.product(a, 0)})
            if (t->target != a || !t->coeff.is_one()) return VerificationReport::failure("unit law", {name(a)});
    }

    // pentagon and normalization on the group-likes
    {
        PhiTable t{n, M.phi_table()};
        CocycleReport c = pentagon_check(t);
        rep.checks += static_cast<long long>(n) * n * n * n;
        if (!c.passed) {
            std::vector<std::string> w;
            for (int x : *c.counterexample) w.push_back("g^" + std::to_string(x));
            return VerificationReport::failure(c.failed_identity, w);
        }
    }

    // Only the coproduct legs on which the reassociator can be nonzero contribute:
    // a_1 (b_1 c_1) Phi(a_2,b_2,c_2)  needs  a_2 group-like,  Phi(a_1,b_1,c_1)(a_2 b_2) c_2  needs  a_1 group-like.
    std::vector<std::vector<std::pair<int, int>>> low_grouplike(D), high_grouplike(D);
    for (int a = 0; a < D; ++a)
        for (const auto& legs : basis_splits(M, a, 2)) {
            if (M.is_grouplike(legs[1])) low_grouplike[a].emplace_back(legs[0], legs[1]);
            if (M.is_grouplike(legs[0])) high_grouplike[a].emplace_back(legs[0], legs[1]);
        }

    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b)
            for (int c = 0; c < D; ++c) {
                ++rep.checks;
                Element lhs, rhs;
                for (auto [a1, a2] : low_grouplike[a])
                    for (auto [b1, b2] : low_grouplike[b])
                        for (auto [c1, c2] : low_grouplike[c]) {
                            CycloNum f = M.phi(a2, b2, c2);
                            if (f.is_zero()) continue;
                            const BasisTerm& bc = M.product(b1, c1);
                            if (bc.target < 0) continue;
                            const BasisTerm& abc = M.product(a1, bc.target);
                            if (abc.target < 0) continue;
                            accumulate(lhs, abc.target, bc.coeff * abc.coeff * f);
                        }
                for (auto [a1, a2] : high_grouplike[a])
                    for (auto [b1, b2] : high_grouplike[b])
                        for (auto [c1, c2] : high_grouplike[c]) {
                            CycloNum f = M.phi(a1, b1, c1);
                            if (f.is_zero()) continue;
                            const BasisTerm& ab = M.product(a2, b2);
                            if (ab.target < 0) continue;
                            const BasisTerm& abc = M.product(ab.target, c2);
                            if (abc.target < 0) continue;
                            accumulate(rhs, abc.target, ab.coeff * abc.coeff * f);
                        }
                if (!element_equal(lhs, rhs))
                    return VerificationReport::failure("quasi-associativity", {name(a), name(b), name(c)});
            }

    // Delta(ab) = a_1 b_1 (x) a_2 b_2 and eps(ab) = eps(a) eps(b)
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            ++rep.checks;
            const BasisTerm& ab = M.product(a, b);
            std::map<std::pair<int, int>, CycloNum> lhs, rhs;
            auto add = [](auto& m, std::pair<int, int> k, const CycloNum& v) {
                if (v.is_zero()) return;
                auto [it, fresh] = m.emplace(k, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) m.erase(it);
                }
            };
            if (ab.target >= 0)
                for (const auto& legs : basis_splits(M, ab.target, 2)) add(lhs, {legs[0], legs[1]}, ab.coeff);
            for (const auto& la : basis_splits(M, a, 2))
                for (const auto& lb : basis_splits(M, b, 2)) {
                    const BasisTerm& top = M.product(la[0], lb[0]);
                    const BasisTerm& low = M.product(la[1], lb[1]);
                    if (top.target < 0 || low.target < 0) continue;
                    add(rhs, {top.target, low.target}, top.coeff * low.coeff);
                }
            bool same = lhs.size() == rhs.size();
            for (auto it = lhs.begin(); same && it != lhs.end(); ++it) {
                auto jt = rhs.find(it->first);
                same = jt != rhs.end() && jt->second == it->second;
            }
            if (!same) return VerificationReport::failure("comultiplication is not multiplicative", {name(a), name(b)});
            CycloNum eps_ab = ab.target >= 0 ? ab.coeff * CycloNum(M.epsilon(ab.target)) : CycloNum(0);
            if (!(eps_ab == CycloNum(M.epsilon(a) * M.epsilon(b))))
                return VerificationReport::failure("counit is not multiplicative", {name(a), name(b)});
        }
    return rep;
}

/// S(g^i) = g^{-i}; for l >= 1 the scalar c in S(p_i^l) = c p_{-i-l}^l is solved from
/// sum_k S(p_{i+k}^{l-k}) alpha(middle leg) p_i^k = 0, degree by degree.
inline std::vector<BasisTerm> solve_antipode(const MajidAlgebra& M) {
    const int n = M.n(), d = M.d();
    std::vector<BasisTerm> S(M.dim());
    for (int i = 0; i < n; ++i) S[i] = {CycloNum(1), M.index(-i, 0)};
    for (int l = 1; l < d; ++l)
        for (int i = 0; i < n; ++i) {
            const int a = M.index(i, l);
            const int slot = M.index(-i - l, l);
            Element known;
            CycloNum unknown_coeff(0);
            int unknown_target = -1;
            for (const auto& legs : basis_splits(M, a, 3)) {
                CycloNum w = M.alpha(legs[1]);
                if (w.is_zero()) continue;
                if (legs[0] == a) {
                    // S(a) alpha(g^{i}) g^i : the unknown term
                    const BasisTerm& t = M.product(slot, legs[2]);
                    unknown_coeff += t.coeff * w;
                    unknown_target = t.target;
                    continue;
                }
                const BasisTerm& s1 = S[legs[0]];
                const BasisTerm& t = M.product(s1.target, legs[2]);
                if (t.target >= 0) accumulate(known, t.target, s1.coeff * t.coeff * w);
            }
            if (unknown_target < 0 || unknown_coeff.is_zero())
                throw StructuralError("antipode equation for " + M.basis(a).to_string() + " has no unique solution");
            for (const auto& [idx, c] : known)
                if (idx != unknown_target)
                    throw StructuralError("antipode equation for " + M.basis(a).to_string() + " has no solution");
            auto it = known.find(unknown_target);
            CycloNum rhs = it == known.end() ? CycloNum(0) : it->second;
            S[a] = {-rhs / unknown_coeff, slot};
        }
    return S;
}

inline void MajidAlgebra::ensure_antipode() const {
    std::call_once(state_->antipode_once, [this] { state_->antipode = solve_antipode(*this); });
}

/// Element S(basis[a]) as a term (zero if the table says so).
inline Element antipode_element(const MajidAlgebra& M, int a) {
    Element e;
    const BasisTerm& t = M.antipode(a);
    accumulate(e, t.target, t.coeff);
    return e;
}

/// Both quasi-antipode identities, both compatibility identities with the reassociator, eps o S = eps,
/// and for s = 0 the Hopf antipode identities.
inline VerificationReport verify_antipode(const MajidAlgebra& M) {
    VerificationReport rep;
    const int D = M.dim();
    auto name = [&](int i) { return basis_name(M, i); };
    auto term_times = [&](const BasisTerm& x, const BasisTerm& y, const CycloNum& w, Element& out) {
        if (x.target < 0 || y.target < 0 || w.is_zero()) return;
        const BasisTerm& t = M.product(x.target, y.target);
        if (t.target >= 0) accumulate(out, t.target, x.coeff * y.coeff * t.coeff * w);
    };
    auto basis_term = [](int idx) { return BasisTerm{CycloNum(1), idx}; };
    auto phi_on = [&](const BasisTerm& x, const BasisTerm& y, const BasisTerm& z, bool inverse) {
        if (x.target < 0 || y.target < 0 || z.target < 0) return CycloNum(0);
        CycloNum f = inverse ? M.phi_inverse(x.target, y.target, z.target) : M.phi(x.target, y.target, z.target);
        return f * x.coeff * y.coeff * z.coeff;
    };

    for (int a = 0; a < D; ++a) {
        ++rep.checks;
        Element e1, e2;
        for (const auto& legs : basis_splits(M, a, 3)) {
            // S(a_1) alpha(a_2) a_3
            term_times(M.antipode(legs[0]), basis_term(legs[2]), M.alpha(legs[1]), e1);
            // a_1 beta(a_2) S(a_3)
            term_times(basis_term(legs[0]), M.antipode(legs[2]), M.beta(legs[1]), e2);
        }
        if (!element_equal(e1, unit_element(M.alpha(a))))
            return VerificationReport::failure("S(a_1) alpha(a_2) a_3 = alpha(a) 1", {name(a)});
        if (!element_equal(e2, unit_element(M.beta(a))))
            return VerificationReport::failure("a_1 beta(a_2) S(a_3) = beta(a) 1", {name(a)});

        CycloNum f1(0), f2(0);
        for (const auto& legs : basis_splits(M, a, 5)) {
            CycloNum w1 = M.beta(legs[1]) * M.alpha(legs[3]);
            if (!w1.is_zero())
                f1 += phi_on(basis_term(legs[0]), M.antipode(legs[2]), basis_term(legs[4]), false) * w1;
            CycloNum w2 = M.alpha(legs[1]) * M.beta(legs[3]);
            if (!w2.is_zero())
                f2 += phi_on(M.antipode(legs[0]), basis_term(legs[2]), M.antipode(legs[4]), true) * w2;
        }
        CycloNum eps(M.epsilon(a));
        if (!(f1 == eps)) return VerificationReport::failure("Phi(a_1,S(a_3),a_5) beta(a_2) alpha(a_4) = eps(a)", {name(a)});
        if (!(f2 == eps))
            return VerificationReport::failure("Phi^-1(S(a_1),a_3,S(a_5)) alpha(a_2) beta(a_4) = eps(a)", {name(a)});

        const BasisTerm& sa = M.antipode(a);
        CycloNum eps_s = sa.target >= 0 ? sa.coeff * CycloNum(M.epsilon(sa.target)) : CycloNum(0);
        if (!(eps_s == eps)) return VerificationReport::failure("eps(S(a)) = eps(a)", {name(a)});

        if (M.s() == 0) {
            Element h1, h2;
            for (const auto& legs : basis_splits(M, a, 2)) {
                term_times(M.antipode(legs[0]), basis_term(legs[1]), CycloNum(1), h1);
                term_times(basis_term(legs[0]), M.antipode(legs[1]), CycloNum(1), h2);
            }
            if (!element_equal(h1, unit_element(eps)) || !element_equal(h2, unit_element(eps)))
                return VerificationReport::failure("Hopf antipode identity", {name(a)});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification

struct ClassificationEntry {
    int n = 2, s = 0;
    long long q_exp = 0;
    int conductor = 2;
    int d = 1;
    int dim = 2;
    bool is_hopf = false;
    bool trivial = false;  // d = 1: the bare group algebra
};

/// Every (s, q) family for a given n, with its truncation length.
inline std::vector<ClassificationEntry> classify(int n) {
    if (n < 2) throw ParameterError("classification requires n >= 2");
    std::vector<ClassificationEntry> out;
    for (int s = 0; s < n; ++s) {
        CocycleParams p(n, s);
        for (int e : p.q_exponents()) {
            int d = natural_truncation(n, s, e);
            out.push_back({n, s, e, p.conductor(), d, n * d, s == 0, d == 1});
        }
    }
    return out;
}

/// Truncation lengths allowed by the dichotomy: divisors of n, or n^2 / gcd(s, n^2) for 1 <= s < n.
inline std::vector<int> admissible_lengths(int n) {
    std::set<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.insert(d);
    for (int s = 1; s < n; ++s) out.insert(n * n / std::gcd(s, n * n));
    return {out.begin(), out.end()};
}

/// Families (s, q) for which the truncation at length d is closed.
inline std::vector<std::pair<int, long long>> closed_truncations(int n, int d) {
    std::vector<std::pair<int, long long>> out;
    for (int s = 0; s < n; ++s)
        for (int e : CocycleParams(n, s).q_exponents()) {
            try {
                build_truncated(n, s, e, d);
                out.emplace_back(s, e);
            } catch (const StructuralError&) {
            }
        }
    return out;
}

}  // namespace mqg

#endif  // MQG_MAJID_ALGEBRA_HPP
