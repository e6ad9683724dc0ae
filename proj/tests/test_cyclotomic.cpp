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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "mqg/cyclotomic.hpp"
#include "oracles.hpp"

using mqg::CycloNum;

namespace {

CycloNum random_element(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> c(-5, 5), den(1, 4);
    CycloNum x(0);
    for (int e = 0; e < N; ++e) x += CycloNum(mpq_class(c(rng), den(rng))) * CycloNum::root_of_unity(N, e);
    return x;
}

}  // namespace

TEST(Cyclotomic, RootOfUnityBasics) {
    EXPECT_TRUE(CycloNum::root_of_unity(1, 0).is_one());
    EXPECT_EQ(CycloNum::root_of_unity(4, 2), CycloNum(-1));
    EXPECT_EQ(CycloNum::root_of_unity(3, 1) + CycloNum::root_of_unity(3, 2), CycloNum(-1));
    EXPECT_THROW(CycloNum::root_of_unity(0, 1), mqg::InvalidConductor);
}

TEST(Cyclotomic, RootOfUnityHasExpectedOrder) {
    for (int N = 1; N <= 30; ++N)
        for (int e = 0; e < N; ++e) {
            CycloNum z = CycloNum::root_of_unity(N, e);
            EXPECT_TRUE(z.pow(N).is_one());
            int expected = N / std::gcd(e, N);
            EXPECT_EQ(mqg::mult_order(z), expected) << "N=" << N << " e=" << e;
        }
}

TEST(Cyclotomic, CyclotomicPolynomialsMatchMoebiusProduct) {
    for (int N = 1; N <= 60; ++N) {
        oracle::IntPoly ref = oracle::cyclotomic(N);
        const auto& got = mqg::detail::cyclotomic_polynomial(N);
        ASSERT_EQ(got.size(), ref.size()) << N;
        for (size_t k = 0; k < ref.size(); ++k) EXPECT_EQ(got[k], ref[k]) << "N=" << N << " k=" << k;
        EXPECT_EQ(static_cast<int>(ref.size()) - 1, mqg::euler_totient(N));
    }
}

TEST(Cyclotomic, FieldOperationsSmallExamples) {
    CycloNum z4 = CycloNum::root_of_unity(4, 1);
    EXPECT_EQ(z4 * z4, CycloNum(-1));
    CycloNum z5 = CycloNum::root_of_unity(5, 1);
    CycloNum sum(0);
    for (int k = 0; k < 5; ++k) sum += z5.pow(k);
    EXPECT_TRUE(((CycloNum(1) - z5) * sum / (CycloNum(1) - z5)).is_zero());
    EXPECT_THROW(z5 / CycloNum(0), mqg::DivisionByZero);
}

TEST(Cyclotomic, ProductsAgreeWithNaiveReduction) {
    std::mt19937 rng(7);
    for (int N : {3, 5, 7, 8, 9, 12, 15, 16, 25}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycloNum a = random_element(rng, N), b = random_element(rng, N);
            auto ca = oracle::coefficients(a), cb = oracle::coefficients(b);
            std::vector<mpq_class> prod(ca.size() + cb.size(), 0);
            for (size_t i = 0; i < ca.size(); ++i)
                for (size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
            auto ref = oracle::reduce(prod, N);
            EXPECT_EQ(oracle::coefficients(a * b), ref) << "N=" << N;
            // the product also matches numerically at every primitive root
            for (int k = 1; k < N; ++k) {
                if (std::gcd(k, N) != 1) continue;
                auto lhs = oracle::evaluate(oracle::coefficients(a * b), N, k);
                auto rhs = oracle::evaluate(ca, N, k) * oracle::evaluate(cb, N, k);
                EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-8);
            }
        }
    }
}

TEST(Cyclotomic, RingAxiomsOnRandomElements) {
    std::mt19937 rng(11);
    for (int N : {4, 6, 9, 10, 12}) {
        for (int trial = 0; trial < 8; ++trial) {
            CycloNum a = random_element(rng, N), b = random_element(rng, N), c = random_element(rng, N);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b * c), (a * b) * c);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + CycloNum(0), a);
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        }
    }
}

TEST(Cyclotomic, NormalizationIsIdempotent) {
    std::mt19937 rng(3);
    for (int N : {5, 12, 20}) {
        CycloNum a = random_element(rng, N);
        EXPECT_EQ(oracle::coefficients(a.normalized()), oracle::coefficients(a));
        EXPECT_EQ(oracle::coefficients(a.normalized().normalized()), oracle::coefficients(a.normalized()));
        EXPECT_EQ(a.denominator() > 0, true);
    }
}

TEST(Cyclotomic, LiftingCommutesWithArithmetic) {
    std::mt19937 rng(5);
    for (auto [N, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}, {6, 2}}) {
        CycloNum a = random_element(rng, N), b = random_element(rng, N);
        EXPECT_EQ((a * b).lifted(N * k), a.lifted(N * k) * b.lifted(N * k));
        EXPECT_EQ((a + b).lifted(N * k), a.lifted(N * k) + b.lifted(N * k));
        EXPECT_EQ(a.lifted(N * k), a);
    }
}

TEST(Cyclotomic, MixedConductorsUnifyToLcm) {
    CycloNum x = CycloNum::root_of_unity(4, 1) * CycloNum::root_of_unity(6, 1);
    EXPECT_EQ(x.conductor(), 12);
    EXPECT_EQ(x, CycloNum::root_of_unity(12, 5));
}

TEST(Cyclotomic, MultiplicativeOrder) {
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(mqg::mult_order(CycloNum::root_of_unity(n * n, n)), n);
    EXPECT_EQ(mqg::mult_order(CycloNum(1)), 1);
    EXPECT_FALSE(mqg::mult_order(CycloNum(0)).has_value());
    EXPECT_FALSE(mqg::mult_order(CycloNum(2)).has_value());
    EXPECT_FALSE(mqg::mult_order(CycloNum(1) + CycloNum::root_of_unity(5, 1)).has_value());
    // n = 2, s = 1, q = zeta_4: qq^{-1} q^{-1} = zeta_4
    CycloNum q = CycloNum::root_of_unity(4, 1), qq = q * q;
    EXPECT_EQ(qq, CycloNum(-1));
    EXPECT_EQ(qq.inverse() * q.inverse(), CycloNum::root_of_unity(4, 1));
    EXPECT_EQ(mqg::mult_order(qq.inverse() * q.inverse()), 4);
}

TEST(Cyclotomic, ConductorCapRaisesResourceError) {
    const long long cap = mqg::max_conductor();
    if (std::getenv("MQG_MAX_CONDUCTOR") == nullptr) EXPECT_EQ(cap, 10000);
    EXPECT_THROW(CycloNum::root_of_unity(cap + 1, 1), mqg::ResourceError);
    EXPECT_NO_THROW(CycloNum::root_of_unity(std::min<long long>(cap, 400), 1));
}

TEST(Cyclotomic, GroupRingAccumulatorMatchesFieldSum) {
    mqg::CyclicSum s(12);
    CycloNum ref(0);
    for (int e : {0, 3, 5, 5, 11, 7}) {
        s.add_rotated(mqg::CyclicSum::unit(12), e);
        ref += CycloNum::root_of_unity(12, e);
    }
    EXPECT_EQ(s.value(), ref);
}
