#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "preach/error.hpp"
#include "preach/numerics/geometry.hpp"

using preach::RatBox;
using preach::RatPoint;
using preach::Rational;

namespace {

RatBox box1(long a, long b, long c, long d) { return RatBox(RatPoint{Rational(a, b)}, RatPoint{Rational(c, d)}); }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(4, 6), Rational(2, 3));
    EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
    EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational::parse("4/6").bitLength(), Rational(2, 3).bitLength());
}

TEST(Rational, ParseRejectsGarbage) {
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1", "--1", "3/-6"}) {
        EXPECT_THROW(Rational::parse(bad), preach::ParseError) << bad;
    }
}

TEST(Rational, FloorCeilPow2) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).ceil(), 4);
    EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
    EXPECT_EQ(Rational::pow2(5), Rational(32));
    EXPECT_THROW(Rational(1) / Rational(0), preach::DomainError);
}

TEST(SupDist, Examples) {
    EXPECT_EQ(preach::supDist(RatPoint{1, 2}, RatPoint{4, 0}), Rational(3));
    EXPECT_EQ(preach::supDist(RatPoint{Rational(1, 3), 0}, RatPoint{Rational(1, 3), 0}), Rational(0));
    EXPECT_EQ(preach::supDist(RatPoint{Rational(2, 3)}, RatPoint{Rational(4, 6)}), Rational(0));
    EXPECT_THROW(preach::supDist(RatPoint{1}, RatPoint{1, 2}), preach::DimensionError);
}

TEST(SupDist, IsAMetric) {
    std::mt19937_64 rng(7);
    const RatBox space(RatPoint{-2, -2, -2}, RatPoint{2, 2, 2});
    for (int i = 0; i < 300; ++i) {
        const auto p = oracle::randomPointIn(rng, space, 5);
        const auto q = oracle::randomPointIn(rng, space, 7);
        const auto r = oracle::randomPointIn(rng, space, 3);
        EXPECT_EQ(preach::supDist(p, q), preach::supDist(q, p));
        EXPECT_EQ(preach::supDist(p, q).sign() == 0, p == q);
        EXPECT_LE(preach::supDist(p, r), preach::supDist(p, q) + preach::supDist(q, r));
    }
}

TEST(BoxIntersects, ClosedSemantics) {
    const RatBox unit(RatPoint{0, 0}, RatPoint{1, 1});
    EXPECT_TRUE(preach::boxIntersects(unit, RatBox(RatPoint{1, 0}, RatPoint{2, 1})));
    EXPECT_FALSE(preach::boxIntersects(box1(0, 1, 1, 1), box1(2, 1, 3, 1)));
    EXPECT_TRUE(preach::boxIntersects(box1(0, 1, 1, 2), box1(1, 2, 1, 1)));
    EXPECT_FALSE(preach::interiorsOverlap(box1(0, 1, 1, 2), box1(1, 2, 1, 1)));
    EXPECT_TRUE(preach::interiorsOverlap(box1(0, 1, 2, 3), box1(1, 2, 1, 1)));
    EXPECT_THROW(preach::boxIntersects(unit, box1(0, 1, 1, 1)), preach::DimensionError);
}

TEST(BoxContains, Examples) {
    EXPECT_TRUE(preach::boxContains(box1(0, 1, 1, 1), RatPoint{1}));
    EXPECT_FALSE(preach::boxContains(box1(0, 1, 1, 1), RatPoint{Rational(3, 2)}));
    const RatBox mid(RatPoint{Rational(1, 4), Rational(1, 4)}, RatPoint{Rational(3, 4), Rational(3, 4)});
    EXPECT_TRUE(preach::boxContains(mid, RatPoint{Rational(1, 2), Rational(1, 2)}));
}

TEST(Boxes, SymmetryAndPointConsistency) {
    std::mt19937_64 rng(11);
    const RatBox space(RatPoint{0, 0}, RatPoint{1, 1});
    for (int i = 0; i < 300; ++i) {
        auto a0 = oracle::randomPointIn(rng, space, 3), a1 = oracle::randomPointIn(rng, space, 3);
        auto b0 = oracle::randomPointIn(rng, space, 3), b1 = oracle::randomPointIn(rng, space, 3);
        for (std::size_t k = 0; k < 2; ++k) {
            if (a1[k] < a0[k]) std::swap(a0[k], a1[k]);
            if (b1[k] < b0[k]) std::swap(b0[k], b1[k]);
        }
        const RatBox a(a0, a1), b(b0, b1);
        EXPECT_EQ(preach::boxIntersects(a, b), preach::boxIntersects(b, a));
        const auto p = oracle::randomPointIn(rng, space, 3);
        if (preach::boxContains(a, p)) {
            EXPECT_TRUE(preach::boxIntersects(a, RatBox::point(p)));
        }
        if (preach::boxIntersects(a, b)) {
            const RatBox c = preach::boxIntersection(a, b);
            EXPECT_TRUE(preach::boxContainsBox(a, c));
            EXPECT_TRUE(preach::boxContainsBox(b, c));
        }
    }
}

TEST(Rational, ArithmeticIsExact) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) - a * b, Rational(0));
        if (b.sign() != 0) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(RatBox, BallAndParse) {
    const auto c = RatPoint::parse("1/2,-3");
    EXPECT_EQ(c, (RatPoint{Rational(1, 2), Rational(-3)}));
    const RatBox ball = RatBox::ball(c, Rational(1, 4));
    EXPECT_EQ(ball.lo(), (RatPoint{Rational(1, 4), Rational(-13, 4)}));
    EXPECT_EQ(ball.center(), c);
    EXPECT_THROW(RatBox(RatPoint{1}, RatPoint{0}), preach::DomainError);
    EXPECT_THROW(RatPoint::parse("1,,2"), preach::ParseError);
}
