/*
   Copyright 2026 The cuboid-quintic authors

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

#include "cuboid/sweep.hpp"
#include "test_support.hpp"

using namespace cuboid;
namespace ct = cuboid::testing;

namespace {
Rational R(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

long long euler_phi(long long n) {
    long long out = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

std::vector<long long> small_divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Rational root theorem on q^10 * P_s(x) with s = p^2/q^2, without the monic reduction.
std::vector<Rational> ps_roots_by_rrt(long long p, long long q) {
    const auto c = ps_coefficients<Rational>(Rational(Integer(p * p), Integer(q * q)));
    std::vector<Rational> roots;
    const long long lead = static_cast<long long>(std::pow(q, 10) + 0.5);
    const long long cst = static_cast<long long>(std::pow(p, 10) + 0.5);
    for (long long d : small_divisors(lead))
        for (long long a : small_divisors(cst))
            for (long long sign : {-1, 1}) {
                const Rational x = R(sign * a, d);
                Rational v(0);
                for (int k = 5; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)];
                if (v.is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}
}  // namespace

TEST(Factor, SmallNumbers) {
    EXPECT_EQ(factor_integer(Integer(360)), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(factor_integer(Integer(-97)), (Factorization{{97, 1}}));
    EXPECT_TRUE(factor_integer(Integer(1)).empty());
    EXPECT_THROW(factor_integer(Integer(0)), std::domain_error);
}

TEST(Factor, DivisorsMatchBruteForce) {
    for (long long n = 1; n <= 500; ++n) {
        std::vector<Integer> expected;
        for (long long d : small_divisors(n)) expected.emplace_back(d);
        EXPECT_EQ(divisors(factor_integer(Integer(n))), expected) << n;
    }
}

TEST(ClearedQuintic, EqualParameters) {
    const UniPolyZ f = clear_to_integer_quintic(CuboidParams::make(1, 1));
    EXPECT_EQ(f.str(Var::x), "x^5 + 3*x^4 + 2*x^3 - 2*x^2 - 3*x - 1");
}

TEST(ClearedQuintic, ConstantTerm) {
    EXPECT_EQ(clear_to_integer_quintic(CuboidParams::make(1, 2)).coefficient(0), -1024);
    EXPECT_EQ(clear_to_integer_quintic(CuboidParams::make(2, 1)).coefficient(0), -1024);
}

TEST(ClearedQuintic, ComposesToQpq) {
    for (long long p = 1; p <= 12; ++p)
        for (long long q = 1; q <= 12; ++q) {
            const auto params = CuboidParams::make(p, q);
            EXPECT_EQ(compose_with_square(clear_to_integer_quintic(params)), build_Qpq(params)) << p << "," << q;
        }
}

TEST(IntegerRoots, Examples) {
    EXPECT_EQ(integer_roots_monic(UniPolyZ({Integer(2), Integer(-3), Integer(1)})),
              (std::vector<Integer>{1, 2}));
    EXPECT_TRUE(integer_roots_monic(UniPolyZ({Integer(1), Integer(0), Integer(1)})).empty());
    EXPECT_EQ(integer_roots_monic(UniPolyZ({Integer(0), Integer(-4), Integer(0), Integer(1)})),
              (std::vector<Integer>{-2, 0, 2}));
    EXPECT_THROW(integer_roots_monic(UniPolyZ({Integer(1), Integer(2)})), std::domain_error);
}

TEST(IntegerRoots, PlantedRootsAreFound) {
    for (int i = 0; i < 100; ++i) {
        // (X - r) * (X^4 + c3 X^3 + ... + c0) with c0 != 0.
        const long long r = ct::uniform(-40, 40);
        std::vector<Integer> g{Integer(ct::uniform(1, 30) * (ct::uniform(0, 1) ? 1 : -1))};
        for (int k = 0; k < 3; ++k) g.emplace_back(ct::uniform(-30, 30));
        g.emplace_back(1);
        std::vector<Integer> f(6, Integer(0));
        for (std::size_t k = 0; k < g.size(); ++k) {
            f[k + 1] += g[k];
            f[k] -= g[k] * r;
        }
        const UniPolyZ poly(f);
        const auto roots = integer_roots_monic(poly);
        EXPECT_NE(std::find(roots.begin(), roots.end(), Integer(r)), roots.end()) << poly.str(Var::x);
        for (const auto& x : roots) EXPECT_TRUE(poly(x).is_zero());
        // Direct scan of a window around zero.
        for (long long x = -200; x <= 200; ++x) {
            if (poly(Integer(x)).is_zero()) {
                EXPECT_NE(std::find(roots.begin(), roots.end(), Integer(x)), roots.end());
            }
        }
    }
}

TEST(RationalRootsPs, Examples) {
    // P_1 = (x - 1)(x + 1)^4
    EXPECT_EQ(rational_roots_Ps(CuboidParams::make(1, 1)), (std::vector<Rational>{R(-1), R(1)}));
    EXPECT_TRUE(rational_roots_Ps(CuboidParams::make(1, 2)).empty());
    EXPECT_TRUE(rational_roots_Ps(CuboidParams::make(2, 3)).empty());
}

TEST(RationalRootsPs, AgreesWithRationalRootTheorem) {
    for (long long p = 1; p <= 6; ++p)
        for (long long q = 1; q <= 6; ++q) {
            if (std::gcd(p, q) != 1) continue;
            EXPECT_EQ(rational_roots_Ps(CuboidParams::make(p, q)), ps_roots_by_rrt(p, q)) << p << "," << q;
        }
}

TEST(Sweep, BoundTwo) {
    const auto r = sweep(2);
    EXPECT_EQ(r.pairs_checked, 2u);
    EXPECT_TRUE(r.confirmed());
}

TEST(Sweep, PairCountFromTotient) {
    for (long long bound : {5, 12}) {
        long long expected = 0;
        for (long long n = 2; n <= bound; ++n) expected += 2 * euler_phi(n);
        EXPECT_EQ(sweep(bound).pairs_checked, static_cast<std::size_t>(expected));
    }
}

TEST(Sweep, InvalidBound) {
    EXPECT_THROW(sweep(1), std::domain_error);
    EXPECT_THROW(sweep(0), std::domain_error);
}

TEST(Sweep, ControlCase) {
    const auto cc = run_control_case();
    EXPECT_EQ(cc.ps_roots, (std::vector<Rational>{R(-1), R(1)}));
    EXPECT_TRUE(cc.division_ok);
    EXPECT_EQ(cc.even_factor, "t^2 + 1");
    EXPECT_EQ(cc.qpq_roots, (std::vector<Integer>{-1, 1}));
    EXPECT_TRUE(cc.bridge_ok);
    EXPECT_TRUE(cc.ok);
}

TEST(Sweep, ControlQuotientMultipliesBack) {
    const auto cc = run_control_case();
    const MultiPoly t = var(Var::t);
    // Q_{1,1} = (t^2 - 1)(t^2 + 1)^4, so the quotient by t^2 + 1 is (t^2 - 1)(t^2 + 1)^3.
    EXPECT_EQ(cc.quotient, ((t * t - MultiPoly(1)) * pow(t * t + MultiPoly(1), 3)).str());
}

TEST(Sweep, BoundTwelveNoViolations) {
    const auto r = sweep(12, 2);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(sweep_check(r).status, Status::pass);
}

TEST(Sweep, JsonShape) {
    const auto j = to_json(sweep(3));
    EXPECT_EQ(j["bound"], 3);
    EXPECT_EQ(j["pairs_checked"], 6);
    EXPECT_TRUE(j["violations"].empty());
    EXPECT_EQ(j["control_case"]["ps_roots"][0], "-1");
}
