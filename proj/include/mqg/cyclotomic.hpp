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
   Exact arithmetic in the cyclotomic fields Q(zeta_N).

   An element is stored in the power basis 1, z, ..., z^(phi(N)-1) of
   Q[x]/(Phi_N) as an integer numerator vector over one positive common
   denominator, reduced so that gcd(den, numerators) = 1. This form is
   canonical for a fixed conductor; values of different conductors are
   compared and combined after lifting both into Q(zeta_lcm).
*/

#ifndef MQG_CYCLOTOMIC_HPP
#define MQG_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mqg/error.hpp"

namespace mqg {

/// Largest admissible conductor; MQG_MAX_CONDUCTOR overrides the default 10000.
inline long long max_conductor() {
    static const long long cap = [] {
        if (const char* env = std::getenv("MQG_MAX_CONDUCTOR")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1) return v;
        }
        return 10000LL;
    }();
    return cap;
}

inline long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline int euler_totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

inline std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Phi_N by recursive division: x^N - 1 = prod_{d | N} Phi_d.
inline std::vector<mpz_class> compute_cyclotomic_polynomial(int N);

inline const std::vector<mpz_class>& cyclotomic_polynomial(int N) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<mpz_class>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return *it->second;
    }
    auto poly = std::make_unique<const std::vector<mpz_class>>(compute_cyclotomic_polynomial(N));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(N, std::move(poly));
    return *it->second;
}

inline std::vector<mpz_class> compute_cyclotomic_polynomial(int N) {
    // coefficients from degree 0 upward
    std::vector<mpz_class> rem(N + 1, 0);
    rem[0] = -1;
    rem[N] = 1;
    for (int d : divisors(N)) {
        if (d == N) break;
        const auto& div = cyclotomic_polynomial(d);
        int dd = static_cast<int>(div.size()) - 1;
        int deg = static_cast<int>(rem.size()) - 1;
        std::vector<mpz_class> quot(deg - dd + 1, 0);
        for (int k = deg; k >= dd; --k) {
            mpz_class c = rem[k];
            quot[k - dd] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * div[j];
        }
        rem = std::move(quot);
    }
    return rem;
}

/// Reduction data for Q(zeta_N); shared by every value of that conductor.
class CyclotomicField {
   public:
    explicit CyclotomicField(int N) : conductor_(N), modulus_(cyclotomic_polynomial(N)) {
        degree_ = static_cast<int>(modulus_.size()) - 1;
        for (int j = 0; j < degree_; ++j)
            if (modulus_[j] != 0) support_.push_back(j);
    }

    static std::shared_ptr<const CyclotomicField> get(long long N) {
        if (N <= 0) throw InvalidConductor("conductor must be positive, got " + std::to_string(N));
        if (N > max_conductor())
            throw ResourceError("conductor " + std::to_string(N) + " exceeds the configured bound " +
                                std::to_string(max_conductor()));
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[static_cast<int>(N)];
        if (!slot) slot = std::make_shared<const CyclotomicField>(static_cast<int>(N));
        return slot;
    }

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    /// Reduces an integer polynomial modulo Phi_N in place; the result has exactly degree() entries.
    void reduce(std::vector<mpz_class>& v) const {
        for (int k = static_cast<int>(v.size()) - 1; k >= degree_; --k) {
            if (v[k] == 0) continue;
            mpz_srcptr c = v[k].get_mpz_t();
            int base = k - degree_;
            for (int j : support_) mpz_submul(v[base + j].get_mpz_t(), c, modulus_[j].get_mpz_t());
            v[k] = 0;
        }
        v.resize(degree_, 0);
    }

   private:
    int conductor_;
    int degree_ = 0;
    std::vector<mpz_class> modulus_;
    std::vector<int> support_;
};

}  // namespace detail

class CycloNum {
   public:
    CycloNum() : CycloNum(0) {}

    CycloNum(long long value) : field_(detail::CyclotomicField::get(1)), num_{mpz_class(static_cast<long>(value))}, den_(1) {}

    explicit CycloNum(const mpq_class& value)
        : field_(detail::CyclotomicField::get(1)), num_{value.get_num()}, den_(value.get_den()) {
        normalize();
    }

    /// zeta_N^e in canonical form.
    static CycloNum root_of_unity(long long N, long long e) {
        CycloNum out;
        out.field_ = detail::CyclotomicField::get(N);
        long long k = floor_mod(e, N);
        std::vector<mpz_class> v(std::max<long long>(k + 1, out.field_->degree()), 0);
        v[k] = 1;
        out.field_->reduce(v);
        out.num_ = std::move(v);
        out.den_ = 1;
        return out;
    }

    /// Builds a value from serialized parts; numerators are listed from degree 0 upward.
    static CycloNum from_parts(long long N, std::vector<mpz_class> num, mpz_class den) {
        CycloNum out;
        out.field_ = detail::CyclotomicField::get(N);
        if (den == 0) throw DivisionByZero("zero denominator");
        if (static_cast<int>(num.size()) != out.field_->degree())
            throw FormatError("expected " + std::to_string(out.field_->degree()) + " coefficients for conductor " +
                              std::to_string(N) + ", got " + std::to_string(num.size()));
        out.num_ = std::move(num);
        out.den_ = std::move(den);
        out.normalize();
        return out;
    }

    int conductor() const { return field_->conductor(); }
    int degree() const { return field_->degree(); }
    std::span<const mpz_class> numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    mpq_class coefficient(int k) const {
        mpq_class c(num_.at(k), den_);
        c.canonicalize();
        return c;
    }

    bool is_zero() const {
        return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
    }

    bool is_rational() const {
        return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
    }

    bool is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

    /// The same number embedded in Q(zeta_M); M must be a multiple of the conductor.
    CycloNum lifted(long long M) const {
        if (M == conductor()) return *this;
        if (M <= 0 || M % conductor() != 0)
            throw InvalidConductor("cannot lift conductor " + std::to_string(conductor()) + " to " + std::to_string(M));
        CycloNum out;
        out.field_ = detail::CyclotomicField::get(M);
        long long step = M / conductor();
        std::vector<mpz_class> v(std::max<long long>((degree() - 1) * step + 1, out.field_->degree()), 0);
        for (int j = 0; j < degree(); ++j) v[j * step] = num_[j];
        out.field_->reduce(v);
        out.num_ = std::move(v);
        out.den_ = den_;
        return out;
    }

    /// Re-applies canonical reduction; exposed so idempotence can be checked.
    CycloNum normalized() const {
        CycloNum out = *this;
        out.normalize();
        return out;
    }

    CycloNum inverse() const;

    CycloNum pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNum result = CycloNum(1).lifted(conductor());
        CycloNum base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc = 0;
        double scale = 1.0 / den_.get_d();
        for (int k = 0; k < degree(); ++k) {
            if (num_[k] == 0) continue;
            double angle = 2.0 * std::numbers::pi * k / conductor();
            acc += num_[k].get_d() * scale * std::polar(1.0, angle);
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < degree(); ++k) {
            if (num_[k] == 0) continue;
            mpq_class c(num_[k], den_);
            c.canonicalize();
            bool neg = c < 0;
            if (neg) c = -c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (k == 0) {
                os << c.get_str();
            } else {
                if (c != 1) os << c.get_str() << "*";
                os << "z" << conductor();
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

    CycloNum operator-() const {
        CycloNum out = *this;
        for (auto& c : out.num_) c = -c;
        return out;
    }

    CycloNum& operator+=(const CycloNum& rhs) { return add(rhs, false); }
    CycloNum& operator-=(const CycloNum& rhs) { return add(rhs, true); }

    CycloNum& operator*=(const CycloNum& rhs) {
        if (conductor() != rhs.conductor()) {
            auto [a, b] = unify(*this, rhs);
            *this = a;
            return *this *= b;
        }
        if (rhs.is_rational()) return scale(rhs.num_[0], rhs.den_);
        if (is_rational()) {
            mpz_class n0 = num_[0], d0 = den_;
            num_ = rhs.num_;
            den_ = rhs.den_;
            return scale(n0, d0);
        }
        int deg = degree();
        std::vector<mpz_class> prod(2 * deg - 1, 0);
        for (int i = 0; i < deg; ++i) {
            if (num_[i] == 0) continue;
            mpz_srcptr a = num_[i].get_mpz_t();
            for (int j = 0; j < deg; ++j) {
                if (rhs.num_[j] == 0) continue;
                mpz_addmul(prod[i + j].get_mpz_t(), a, rhs.num_[j].get_mpz_t());
            }
        }
        field_->reduce(prod);
        num_ = std::move(prod);
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    CycloNum& operator/=(const CycloNum& rhs) { return *this *= rhs.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.conductor() == b.conductor()) return a.den_ == b.den_ && a.num_ == b.num_;
        auto [x, y] = unify(a, b);
        return x.den_ == y.den_ && x.num_ == y.num_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

    /// Both operands lifted to the least common conductor.
    static std::pair<CycloNum, CycloNum> unify(const CycloNum& a, const CycloNum& b) {
        long long L = std::lcm<long long>(a.conductor(), b.conductor());
        if (L > max_conductor())
            throw ResourceError("conductor " + std::to_string(L) + " exceeds the configured bound " +
                                std::to_string(max_conductor()));
        return {a.lifted(L), b.lifted(L)};
    }

   private:
    std::shared_ptr<const detail::CyclotomicField> field_;
    std::vector<mpz_class> num_;
    mpz_class den_;

    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            for (auto& c : num_) c = -c;
        }
        if (den_ == 1) return;
        if (is_zero()) {
            den_ = 1;
            return;
        }
        mpz_class g = den_;
        for (const auto& c : num_) {
            if (c == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return;
        }
        den_ /= g;
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    CycloNum& scale(const mpz_class& n, const mpz_class& d) {
        if (n == 0) {
            std::fill(num_.begin(), num_.end(), 0);
            den_ = 1;
            return *this;
        }
        if (n != 1)
            for (auto& c : num_) c *= n;
        den_ *= d;
        normalize();
        return *this;
    }

    CycloNum& add(const CycloNum& rhs, bool subtract) {
        if (conductor() != rhs.conductor()) {
            auto [a, b] = unify(*this, rhs);
            *this = a;
            return add(b, subtract);
        }
        if (den_ == rhs.den_) {
            for (int k = 0; k < degree(); ++k) subtract ? num_[k] -= rhs.num_[k] : num_[k] += rhs.num_[k];
        } else {
            for (int k = 0; k < degree(); ++k) {
                num_[k] *= rhs.den_;
                if (subtract)
                    mpz_submul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), den_.get_mpz_t());
                else
                    mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), den_.get_mpz_t());
            }
            den_ *= rhs.den_;
        }
        normalize();
        return *this;
    }
};

namespace detail {

using RatPoly = std::vector<mpq_class>;

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division over Q; returns quotient, leaves remainder in a.
inline RatPoly divmod(RatPoly& a, const RatPoly& b) {
    trim(a);
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {};
    RatPoly q(a.size() - db, 0);
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        if (a[k] == 0) continue;
        mpq_class c = a[k] / b[db];
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    trim(a);
    return q;
}

inline RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    RatPoly out(std::max(a.size(), q.size() + b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

}  // namespace detail

// Extended Euclid modulo Phi_N: find u with num * u = 1 (mod Phi_N).
inline CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) {
        mpq_class r(den_, num_[0]);
        r.canonicalize();
        return CycloNum(r).lifted(conductor());
    }
    using detail::RatPoly;
    RatPoly r0(field_->modulus().begin(), field_->modulus().end());
    RatPoly r1(num_.begin(), num_.end());
    detail::trim(r1);
    RatPoly s0{}, s1{mpq_class(1)};
    while (r1.size() > 1) {
        RatPoly rem = r0;
        RatPoly q = detail::divmod(rem, r1);
        RatPoly s2 = detail::poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw DivisionByZero("value is not invertible modulo the cyclotomic polynomial");
    mpq_class lead = r1[0];
    // u = s1 / lead, then multiply by den_ (the inverse of num/den is den * num^-1).
    mpz_class common = 1;
    for (const auto& c : s1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> v(std::max<size_t>(s1.size(), degree()), 0);
    for (size_t k = 0; k < s1.size(); ++k) {
        mpq_class t = s1[k] * common;
        v[k] = t.get_num();
    }
    field_->reduce(v);
    mpq_class scale = mpq_class(den_) / (lead * common);
    CycloNum out;
    out.field_ = field_;
    out.num_ = std::move(v);
    out.den_ = 1;
    out.normalize();
    return out.scale(scale.get_num(), scale.get_den());
}

inline CycloNum root_of_unity(long long N, long long e) { return CycloNum::root_of_unity(N, e); }

/// Smallest k >= 1 with a^k = 1, or nullopt when a is zero or not a root of unity.
inline std::optional<long long> mult_order(const CycloNum& a) {
    if (a.is_zero()) return std::nullopt;
    // Roots of unity in Q(zeta_N) form a cyclic group of order lcm(2, N).
    long long M = std::lcm<long long>(2, a.conductor());
    if (!a.pow(M).is_one()) return std::nullopt;
    for (int k : detail::divisors(static_cast<int>(M)))
        if (a.pow(k).is_one()) return k;
    return M;
}

/// zeta_N^e kept symbolically; the scalar type of every bimodule action.
struct RootOfUnity {
    int conductor = 1;
    long long exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(int N, long long e) : conductor(N), exponent(floor_mod(e, N)) {}

    CycloNum value() const { return CycloNum::root_of_unity(conductor, exponent); }
    RootOfUnity operator*(const RootOfUnity& o) const { return {conductor, exponent + o.exponent}; }
    RootOfUnity inverse() const { return {conductor, -exponent}; }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.conductor == b.conductor && a.exponent == b.exponent;
    }
};

/// Element of the group ring Z[C_N]; accumulates sums of roots of unity with machine integers.
class CyclicSum {
   public:
    explicit CyclicSum(int N = 1) : coeffs_(N, 0) {}

    static CyclicSum unit(int N) {
        CyclicSum s(N);
        s.coeffs_[0] = 1;
        return s;
    }

    int conductor() const { return static_cast<int>(coeffs_.size()); }

    /// this += other * zeta_N^e
    void add_rotated(const CyclicSum& other, long long e) {
        int N = conductor();
        long long shift = floor_mod(e, N);
        for (int k = 0; k < N; ++k) {
            long long c = other.coeffs_[k];
            if (c == 0) continue;
            long long& slot = coeffs_[(k + shift) % N];
            if (__builtin_add_overflow(slot, c, &slot)) throw ResourceError("group-ring accumulator overflow");
        }
    }

    CycloNum value() const {
        auto field = detail::CyclotomicField::get(conductor());
        std::vector<mpz_class> v(std::max(conductor(), field->degree()), 0);
        for (int k = 0; k < conductor(); ++k) v[k] = static_cast<long>(coeffs_[k]);
        field->reduce(v);
        return CycloNum::from_parts(conductor(), std::move(v), 1);
    }

   private:
    std::vector<long long> coeffs_;
};

}  // namespace mqg

#endif  // MQG_CYCLOTOMIC_HPP
