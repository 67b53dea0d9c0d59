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

#include <numeric>
#include <set>

#include "cuboid/curve.hpp"
#include "test_support.hpp"

using namespace cuboid;
using curve::CurvePoint;
namespace ct = cuboid::testing;

namespace {
Rational R(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

const std::vector<CurvePoint> kSix = {
    CurvePoint::at_infinity(),        CurvePoint::affine(R(-1), R(0)), CurvePoint::affine(R(0), R(-1)),
    CurvePoint::affine(R(0), R(1)),   CurvePoint::affine(R(1), R(-8)), CurvePoint::affine(R(1), R(8)),
};

// Straight Rational evaluation of f at every a/b and a square test on the value.
std::vector<CurvePoint> naive_search(long long height) {
    std::set<CurvePoint> pts{CurvePoint::at_infinity()};
    for (long long b = 1; b <= height; ++b)
        for (long long a = -height; a <= height; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Rational t = R(a, b);
            const Rational v = Rational(1) + t * (Rational(5) + t * (Rational(10) + t * (Rational(26) +
                                                                                    t * (Rational(21) + t))));
            if (auto w = rational_sqrt(v)) {
                pts.insert(CurvePoint::affine(t, *w));
                pts.insert(CurvePoint::affine(t, -*w));
            }
        }
    return {pts.begin(), pts.end()};
}
}  // namespace

TEST(Quintic, Values) {
    EXPECT_EQ(curve::f_eval(R(0)), R(1));
    EXPECT_EQ(curve::f_eval(R(1)), R(64));
    EXPECT_EQ(curve::f_eval(R(-1)), R(0));
}

TEST(Quintic, Factorization) { EXPECT_TRUE(curve::check_f_factorization().passed()); }

TEST(Quintic, OnCurve) {
    EXPECT_TRUE(curve::on_curve(CurvePoint::affine(R(1), R(8))));
    EXPECT_TRUE(curve::on_curve(CurvePoint::affine(R(-1), R(0))));
    EXPECT_FALSE(curve::on_curve(CurvePoint::affine(R(2), R(10))));
    EXPECT_TRUE(curve::on_curve(CurvePoint::at_infinity()));
}

TEST(Quintic, HomogeneousValueMatchesScaledF) {
    for (int i = 0; i < 200; ++i) {
        const long long b = ct::uniform(1, 5000);
        const long long a = ct::uniform(-5000, 5000);
        EXPECT_EQ(Rational(curve::homogeneous_value(Integer(a), Integer(b))),
                  pow(R(b), 6) * curve::f_eval(R(a, b)));
    }
}

TEST(Search, HeightOne) { EXPECT_EQ(curve::search_points(1), kSix); }

TEST(Search, InvalidHeight) {
    EXPECT_THROW(curve::search_points(0), std::domain_error);
    EXPECT_THROW(curve::search_points(-3), std::domain_error);
}

TEST(Search, MatchesNaiveOracle) {
    for (long long h : {2, 5, 13, 30}) EXPECT_EQ(curve::search_points(h), naive_search(h)) << "height " << h;
}

TEST(Search, EveryPointLiesOnTheCurve) {
    for (const auto& pt : curve::search_points(100)) EXPECT_TRUE(curve::on_curve(pt)) << pt.str();
}

TEST(Search, MonotoneInHeight) {
    const auto small = curve::search_points(20);
    const auto large = curve::search_points(60);
    EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST(Search, SymmetricInW) {
    const auto pts = curve::search_points(50);
    for (const auto& pt : pts) {
        if (pt.infinity) continue;
        EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), CurvePoint::affine(pt.t, -pt.w))) << pt.str();
    }
}

TEST(Search, PrefilterDoesNotDropPoints) {
    const auto with = curve::search_points(200, {1, true});
    const auto without = curve::search_points(200, {1, false});
    EXPECT_EQ(with, without);
    EXPECT_EQ(with, kSix);
}

TEST(Search, ThreadCountDoesNotChangeResult) {
    EXPECT_EQ(curve::search_points(150, {1, true}), curve::search_points(150, {4, true}));
}

TEST(Prefilter, ResiduesMatchBigIntegerValue) {
    for (int i = 0; i < 2000; ++i) {
        const long long a = ct::uniform(-100000, 100000);
        const long long b = ct::uniform(1, 100000);
        const Integer n = curve::homogeneous_value(Integer(a), Integer(b));
        for (int m : {63, 64, 65}) {
            Integer r = n % m;
            if (r < 0) r += m;
            EXPECT_EQ(curve::detail::homogeneous_mod(a, b, m), r.convert_to<int>()) << a << "/" << b << " mod " << m;
        }
    }
}

TEST(Prefilter, AcceptsTheKnownPoints) {
    for (auto [a, b] : {std::pair{-1LL, 1LL}, {0LL, 1LL}, {1LL, 1LL}}) EXPECT_TRUE(curve::detail::may_be_square(a, b));
}

TEST(Certificate, ParsesTranscript) {
    const auto ext = curve::chabauty_certificate();
    EXPECT_EQ(ext.rank_bound, 1);
    EXPECT_EQ(ext.claimed_points, kSix);
    EXPECT_FALSE(ext.transcript.empty());
}

TEST(Certificate, ProjectiveMapping) {
    const auto pts = curve::parse_projective_points("(2 : 16 : 2) (3 : 0 : 0)");
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_TRUE(pts[0].infinity);
    EXPECT_EQ(pts[1], CurvePoint::affine(R(1), R(2)));
    EXPECT_THROW(curve::parse_projective_points("(0 : 1 : 0)"), std::domain_error);
}

TEST(Certificate, ReproductionPasses) {
    const auto ext = curve::chabauty_certificate();
    const auto cert = curve::certify_points(curve::search_points(10), ext, 10);
    EXPECT_EQ(cert.reproduction.status, Status::pass);
    EXPECT_EQ(cert.completeness.status, Status::external_assumption);
}

TEST(Certificate, SubsetPassesAndNamesMissing) {
    const auto ext = curve::chabauty_certificate();
    const std::vector<CurvePoint> partial(kSix.begin(), kSix.begin() + 3);
    const auto cert = curve::certify_points(partial, ext, 1);
    EXPECT_EQ(cert.reproduction.status, Status::pass);
    EXPECT_NE(cert.reproduction.witness.find("not yet found"), std::string::npos);
}

TEST(Certificate, ExtraPointFails) {
    const auto ext = curve::chabauty_certificate();
    auto found = kSix;
    found.push_back(CurvePoint::affine(R(2), R(10)));
    const auto cert = curve::certify_points(found, ext, 10);
    EXPECT_EQ(cert.reproduction.status, Status::fail);
    EXPECT_NE(cert.reproduction.witness.find("(2, 10)"), std::string::npos);
}

TEST(Json, PointShape) {
    const auto j = curve::to_json(kSix);
    ASSERT_EQ(j.size(), 6u);
    EXPECT_EQ(j[0].dump(), curve::to_json(CurvePoint::at_infinity()).dump());
}
