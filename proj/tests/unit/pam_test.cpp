#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "preach/error.hpp"
#include "preach/io/pam_file.hpp"
#include "preach/pam/evaluator.hpp"

using preach::RatBox;
using preach::RatPoint;
using preach::Rational;
using namespace preach::pam;

namespace {
using Rows = std::vector<std::vector<Rational>>;


PamSystem s1() { return preach::io::parsePamFile(oracle::fixture("s1.json")); }
PamSystem s2() { return preach::io::parsePamFile(oracle::fixture("s2.json")); }

RatBox unitInterval() { return RatBox(RatPoint{0}, RatPoint{1}); }

}  // namespace

TEST(EvalPam, Examples) {
    EXPECT_EQ(evalPam(s1(), RatPoint{1}), RatPoint{Rational(1, 2)});
    EXPECT_EQ(evalPam(s2(), RatPoint{1}), RatPoint{1});
    // Shared face: the lower-index piece wins.
    EXPECT_EQ(evalPam(s2(), RatPoint{Rational(1, 2)}), RatPoint{Rational(1, 4)});
}

TEST(EvalPam, Errors) {
    EXPECT_THROW(evalPam(s1(), RatPoint{2}), preach::DomainError);
    EXPECT_THROW(evalPam(s1(), RatPoint{0, 0}), preach::DimensionError);

    const PamSystem partial(unitInterval(), {{RatBox(RatPoint{0}, RatPoint{Rational(1, 2)}), Matrix(Rows{{1}}), RatPoint{0}}});
    EXPECT_THROW(evalPam(partial, RatPoint{Rational(3, 4)}), preach::UndefinedError);
    EXPECT_FALSE(tryEvalPam(partial, RatPoint{Rational(3, 4)}).has_value());

    const PamSystem shift(unitInterval(), {{unitInterval(), Matrix(Rows{{1}}), RatPoint{Rational(1, 2)}}});
    EXPECT_THROW(evalPam(shift, RatPoint{1}), preach::EscapeError);
    EXPECT_EQ(*tryEvalPam(shift, RatPoint{1}), RatPoint{Rational(3, 2)});
}

TEST(PamSystem, RejectsBadPieces) {
    EXPECT_THROW(PamSystem(unitInterval(), {}), preach::Error);
    EXPECT_THROW(preach::io::parsePamFile(oracle::fixture("overlapping.json")), preach::ParseError);
    const AffinePiece outside{RatBox(RatPoint{0}, RatPoint{2}), Matrix(Rows{{1}}), RatPoint{0}};
    EXPECT_THROW(PamSystem(unitInterval(), {outside}), preach::DomainError);
}

TEST(Lipschitz, Examples) {
    EXPECT_EQ(lipschitzConst(s1()), Rational(1, 2));
    EXPECT_EQ(lipschitzConst(s2()), Rational(1, 2));

    const AffinePiece p{RatBox(RatPoint{0, 0}, RatPoint{1, 1}), Matrix(Rows{{1, -2}, {0, 3}}), RatPoint{0, 0}};
    EXPECT_EQ(p.matrix.supNorm(), Rational(3));
    // Row sums are {3, 3}. The sampled ratio approaches 3 and never exceeds it.
    std::mt19937_64 rng(5);
    const Rational sampled = oracle::sampledLipschitz(p, rng, 4000);
    EXPECT_LE(sampled, Rational(3));
    EXPECT_GE(sampled, Rational(29, 10));
    // Attained exactly on the direction (1, -1).
    EXPECT_EQ(preach::supDist(p.apply(RatPoint{0, 1}), p.apply(RatPoint{1, 0})), Rational(3));
}

TEST(Lipschitz, SoundOnRandomPieces) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sys = oracle::randomContinuousPam(rng, 1 + trial % 2);
        for (const auto& piece : sys.pieces()) {
            for (int s = 0; s < 20; ++s) {
                const auto x = oracle::randomPointIn(rng, piece.region, 10);
                const auto y = oracle::randomPointIn(rng, piece.region, 10);
                EXPECT_LE(preach::supDist(evalPam(sys, x), evalPam(sys, y)),
                          lipschitzConst(sys) * preach::supDist(x, y));
            }
        }
    }
}

TEST(ImageBox, Examples) {
    const auto sys1 = s1();
    EXPECT_EQ(imageBox(sys1.pieces()[0], unitInterval()), RatBox(RatPoint{0}, RatPoint{Rational(1, 2)}));

    const RatBox sq(RatPoint{0, 0}, RatPoint{1, 1});
    const AffinePiece shear{sq, Matrix(Rows{{1, -1}, {0, 1}}), RatPoint{0, 0}};
    EXPECT_EQ(imageBox(shear, sq), RatBox(RatPoint{-1, 0}, RatPoint{1, 1}));

    const auto sys2 = s2();
    EXPECT_EQ(imageBox(sys2.pieces()[1], RatBox::point(RatPoint{Rational(1, 2)})),
              RatBox::point(RatPoint{Rational(3, 4)}));
    EXPECT_THROW(imageBox(sys2.pieces()[0], unitInterval()), preach::DomainError);
}

TEST(ImageBox, MatchesCornersAndContainsSamples) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 3;
        std::vector<std::vector<Rational>> rows(d);
        std::vector<Rational> off;
        for (auto& row : rows) {
            for (std::size_t c = 0; c < d; ++c) row.push_back(oracle::randomDyadic(rng, -2, 2, 3));
            off.push_back(oracle::randomDyadic(rng, -1, 1, 3));
        }
        std::vector<Rational> lo(d, Rational(-1)), hi(d, Rational(1));
        const AffinePiece piece{RatBox(RatPoint(lo), RatPoint(hi)), Matrix(rows), RatPoint(off)};
        auto a = oracle::randomPointIn(rng, piece.region, 4), b = oracle::randomPointIn(rng, piece.region, 4);
        for (std::size_t k = 0; k < d; ++k) {
            if (b[k] < a[k]) std::swap(a[k], b[k]);
        }
        const RatBox box(a, b);
        const RatBox img = imageBox(piece, box);
        EXPECT_EQ(img, oracle::cornerImageBox(piece, box));
        for (int s = 0; s < 10; ++s) {
            EXPECT_TRUE(preach::boxContains(img, piece.apply(oracle::randomPointIn(rng, box, 6))));
        }
    }
}

TEST(EvalPam, StaysRational) {
    std::mt19937_64 rng(29);
    const auto sys = oracle::randomContinuousPam(rng, 2);
    RatPoint x{Rational(1, 3), Rational(2, 7)};
    for (int i = 0; i < 30; ++i) {
        x = evalPam(sys, x);
        EXPECT_TRUE(preach::boxContains(sys.domain(), x));
    }
}

TEST(EvalApprox, PamBackendIsExact) {
    const auto sys = s1();
    const PamEvaluator ev(sys);
    EXPECT_EQ(evalApprox(ev, RatPoint{1}, 10), RatPoint{Rational(1, 2)});
    EXPECT_EQ(ev.lipschitz(), Rational(1, 2));
    EXPECT_THROW(evalApprox(ev, RatPoint{1}, -1), preach::DomainError);
    EXPECT_THROW(evalApprox(ev, RatPoint{3}, 2), preach::DomainError);
}

TEST(EvalApprox, DyadicContract) {
    const DyadicEvaluator third(unitInterval(), Rational(1, 3),
                                [](const RatPoint& x) { return RatPoint{x[0] / Rational(3)}; });
    const auto v = evalApprox(third, RatPoint{1}, 2)[0];
    EXPECT_GE(v, Rational(1, 3) - Rational(1, 4));
    EXPECT_LE(v, Rational(1, 3) + Rational(1, 4));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto x = oracle::randomPointIn(rng, unitInterval(), 9);
        const Rational exact = x[0] / Rational(3);
        for (int m = 0; m <= 12; ++m) {
            EXPECT_LE(preach::abs(evalApprox(third, x, m)[0] - exact), Rational::pow2(-m));
        }
        EXPECT_LE(preach::supDist(evalApprox(third, x, 3), evalApprox(third, x, 5)),
                  Rational::pow2(-3) + Rational::pow2(-5));
    }
}
