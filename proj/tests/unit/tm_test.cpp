#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "preach/error.hpp"
#include "preach/io/tm_file.hpp"
#include "preach/tm/length.hpp"
#include "preach/tm/perturbed.hpp"

using preach::Rational;
using namespace preach::tm;

namespace {

TuringMachine load(const std::string& name) { return preach::io::parseTmFile(oracle::fixture(name)); }

// One rule (q0,1) -> (q1,0,R); q1 accepts.
TuringMachine tiny() {
    return preach::io::parseTmText(
        "states: q0 q1\nalphabet: 0 1\nblank: _\ninitial: q0\naccept: q1\nreject:\nq0 1 -> q1 0 R\n");
}

// Loops forever between two non-halting states; an accepting state exists but is never entered.
TuringMachine looper() {
    return preach::io::parseTmText(
        "states: a b acc\nalphabet: 0 1\nblank: _\ninitial: a\naccept: acc\nreject:\n"
        "a 0 -> b 0 S\na 1 -> b 1 S\na _ -> b _ S\nb 0 -> a 0 S\nb 1 -> a 1 S\nb _ -> a _ S\n");
}

Configuration config(const TuringMachine& m, const std::string& state, const std::string& left,
                     const std::string& right) {
    Configuration c{m.stateId(state), m.word(left), m.word(right)};
    c.canonicalize();
    return c;
}

}  // namespace

TEST(TmStep, Examples) {
    const auto m = tiny();
    EXPECT_EQ(tmStep(m, config(m, "q0", "", "1")), config(m, "q1", "0", ""));
    // q1 accepts and has no rule: absorbing.
    EXPECT_EQ(tmStep(m, config(m, "q1", "0", "")), config(m, "q1", "0", ""));
    // Empty tape reads the blank; no rule for (q0, _) in a non-halting state.
    EXPECT_EQ(config(m, "q0", "", "").head(), kBlank);
    EXPECT_THROW(tmStep(m, config(m, "q0", "", "")), HaltError);
}

TEST(TmStep, TrimsBlanks) {
    const auto m = load("palindrome.tm");
    auto c = config(m, "start", "", "0");
    c = tmStep(m, c);  // erase and move right
    EXPECT_TRUE(c.left.empty());
    EXPECT_TRUE(c.right.empty());
    EXPECT_EQ(c.state, m.stateId("have0"));
}

TEST(TmStep, MatchesArraySimulator) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::randomMachine(rng, 1 + trial % 3);
        for (const auto& w : oracle::binaryWords(4)) {
            const auto run = tmRun(m, m.word(w), 40);
            const auto ref = oracle::simulate(m, w, 40);
            EXPECT_EQ(static_cast<int>(run.outcome), static_cast<int>(ref.end));
            EXPECT_EQ(run.steps, ref.steps);
            EXPECT_EQ(spaceUsed(m, m.word(w), 40), ref.cellsVisited);
        }
    }
}

TEST(TmRun, Examples) {
    const auto accept = load("immediate_accept.tm");
    for (const auto& w : oracle::binaryWords(3)) {
        const auto r = tmRun(accept, accept.word(w), 10);
        EXPECT_EQ(r.outcome, Outcome::Accept);
        EXPECT_EQ(r.steps, 1U);
    }
    const auto mover = load("right_mover.tm");
    const auto r = tmRun(mover, mover.word("01"), 100);
    EXPECT_EQ(r.outcome, Outcome::Running);
    EXPECT_EQ(r.steps, 100U);

    const auto pal = load("palindrome.tm");
    const auto p = tmRun(pal, pal.word("0110"), 1000);
    EXPECT_EQ(p.outcome, Outcome::Accept);
    EXPECT_EQ(p.steps, oracle::simulate(pal, "0110", 1000).steps);

    const auto t = tiny();
    EXPECT_EQ(tmRun(t, t.word("0"), 5).outcome, Outcome::Stuck);
    EXPECT_EQ(tmRun(t, t.word("1"), 0).outcome, Outcome::Running);
}

TEST(TmRun, PalindromeDecider) {
    const auto pal = load("palindrome.tm");
    for (const auto& w : oracle::binaryWords(6)) {
        const auto r = tmRun(pal, pal.word(w), 10000);
        EXPECT_EQ(r.outcome, oracle::isPalindrome(w) ? Outcome::Accept : Outcome::Reject) << w;
        EXPECT_EQ(spaceUsed(pal, pal.word(w), 10000), w.size() + 1) << w;
    }
}

TEST(Truncate, Examples) {
    const auto m = tiny();
    const auto c = config(m, "q0", "", "1");
    const Window w = truncate(c, 1);
    EXPECT_EQ(w.left, m.word("_"));
    EXPECT_EQ(w.right, m.word("1_"));

    const auto wide = config(m, "q0", "0101", "10110");
    EXPECT_EQ(truncate(wide, 0).left, Word{});
    EXPECT_EQ(truncate(wide, 0).right, m.word("1"));
    const Window w2 = truncate(wide, 2);
    const Configuration back{w2.state, w2.left, w2.right};
    EXPECT_EQ(truncate(back, 2), w2);
}

TEST(WindowSuccessors, Counts) {
    const auto pal = load("palindrome.tm");
    const auto right = windowSuccessors(pal, truncate(config(pal, "start", "", "01"), 2));
    EXPECT_EQ(right.windows.size(), 3U);
    for (const auto& w : right.windows) {
        EXPECT_EQ(w.left, pal.word("__"));
        EXPECT_EQ(w.right.size(), 3U);
        EXPECT_EQ(w.right[0], pal.symbolOf('1'));
    }
    const auto stay = windowSuccessors(pal, truncate(config(pal, "check0", "", "1"), 2));
    EXPECT_EQ(stay.windows.size(), 1U);
    EXPECT_EQ(stay.windows[0].state, pal.stateId("reject"));

    const auto acc = windowSuccessors(pal, truncate(config(pal, "accept", "1", "0"), 1));
    ASSERT_EQ(acc.windows.size(), 1U);
    EXPECT_TRUE(pal.isAccepting(acc.windows[0].state));

    const auto t = tiny();
    const auto stuck = windowSuccessors(t, truncate(config(t, "q0", "", ""), 1));
    EXPECT_TRUE(stuck.halted);
    EXPECT_TRUE(stuck.windows.empty());
}

TEST(WindowSuccessors, LeftMoveShiftsWindow) {
    const auto pal = load("palindrome.tm");
    // back reads 0 and moves left: the head lands on the nearest left cell.
    const auto next = windowSuccessors(pal, truncate(config(pal, "back", "10", "0"), 2));
    ASSERT_EQ(next.windows.size(), 3U);
    for (std::size_t s = 0; s < 3; ++s) {
        EXPECT_EQ(next.windows[s].right, pal.word("10_"));
        EXPECT_EQ(next.windows[s].left[0], pal.symbolOf('0'));
        EXPECT_EQ(next.windows[s].left[1], static_cast<Symbol>(s));
    }
}

TEST(SpacePerturbed, ContainsExactLanguage) {
    const auto pal = load("palindrome.tm");
    for (const auto& w : oracle::binaryWords(5)) {
        if (!oracle::isPalindrome(w)) continue;
        for (std::size_t n = 1; n <= 4; ++n) {
            EXPECT_TRUE(acceptsSpacePerturbed(pal, pal.word(w), n)) << w << " n=" << n;
        }
    }
}

TEST(SpacePerturbed, RobustWindowForPalindromes) {
    const auto pal = load("palindrome.tm");
    for (const auto& w : oracle::binaryWords(5)) {
        const std::size_t s = spaceUsed(pal, pal.word(w), 10000);
        EXPECT_EQ(acceptsSpacePerturbed(pal, pal.word(w), s + 2), oracle::isPalindrome(w)) << w;
    }
}

TEST(SpacePerturbed, ForgedMarker) {
    const auto m = load("far_marker.tm");
    EXPECT_EQ(tmRun(m, m.word(""), 100).outcome, Outcome::Reject);
    EXPECT_TRUE(acceptsSpacePerturbed(m, m.word(""), 1));
    EXPECT_FALSE(acceptsSpacePerturbed(m, m.word(""), 4));
    EXPECT_THROW(acceptsSpacePerturbed(m, m.word(""), 0), preach::DomainError);
}

TEST(SpacePerturbed, MatchesBruteForce) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = oracle::randomMachine(rng, 1 + trial % 2);
        for (const auto& w : oracle::binaryWords(3)) {
            for (std::size_t n = 1; n <= 2; ++n) {
                EXPECT_EQ(acceptsSpacePerturbed(m, m.word(w), n), oracle::spacePerturbedBrute(m, w, n))
                    << preach::io::serializeTm(m) << "w=" << w << " n=" << n;
            }
        }
    }
}

TEST(SpacePerturbed, MonotoneInN) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = oracle::randomMachine(rng, 2);
        for (const auto& w : oracle::binaryWords(3)) {
            const bool exact = tmRun(m, m.word(w), 200).outcome == Outcome::Accept;
            bool previous = true;
            for (std::size_t n = 1; n <= 4; ++n) {
                const bool now = acceptsSpacePerturbed(m, m.word(w), n);
                EXPECT_TRUE(!exact || now);
                EXPECT_TRUE(previous || !now) << "L_" << n << " not inside L_" << n - 1;
                previous = now;
            }
        }
    }
}

TEST(TimePerturbed, Examples) {
    const auto loop = looper();
    for (std::size_t n = 0; n < 6; ++n) {
        EXPECT_TRUE(acceptsTimePerturbed(loop, loop.word("01"), n));
    }
    const auto pal = load("palindrome.tm");
    const auto rejected = tmRun(pal, pal.word("01"), 1000);
    ASSERT_EQ(rejected.outcome, Outcome::Reject);
    EXPECT_FALSE(acceptsTimePerturbed(pal, pal.word("01"), rejected.steps));
    EXPECT_FALSE(acceptsTimePerturbed(pal, pal.word("01"), rejected.steps + 5));
    EXPECT_TRUE(acceptsTimePerturbed(pal, pal.word("01"), rejected.steps - 1));
    for (std::size_t n = 0; n < 30; ++n) {
        EXPECT_TRUE(acceptsTimePerturbed(pal, pal.word("0110"), n));
    }
    // Without accepting states a perturbation has nowhere to go.
    const auto mover = load("right_mover.tm");
    EXPECT_FALSE(acceptsTimePerturbed(mover, mover.word(""), 3));
}

TEST(TimePerturbed, MatchesBruteForce) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = oracle::randomMachine(rng, 1);
        for (const auto& w : oracle::binaryWords(3)) {
            for (std::size_t n = 0; n <= 4; ++n) {
                EXPECT_EQ(acceptsTimePerturbed(m, m.word(w), n), oracle::timePerturbedBrute(m, w, n))
                    << preach::io::serializeTm(m) << "w=" << w << " n=" << n;
            }
        }
    }
}

TEST(TimePerturbed, MonotoneAndEventuallyExact) {
    const auto pal = load("palindrome.tm");
    for (const auto& w : oracle::binaryWords(5)) {
        const auto run = tmRun(pal, pal.word(w), 10000);
        bool previous = true;
        for (std::size_t n = 0; n <= run.steps + 3; ++n) {
            const bool now = acceptsTimePerturbed(pal, pal.word(w), n);
            EXPECT_TRUE(previous || !now);
            previous = now;
            if (n >= run.steps + 1) {
                EXPECT_EQ(now, run.outcome == Outcome::Accept) << w;
            }
        }
    }
}

TEST(ConfigDistance, Examples) {
    const auto pal = load("palindrome.tm");
    const auto c = config(pal, "start", "1", "01");
    EXPECT_EQ(configDistance(pal, c, c), Rational(0));
    const auto d = config(pal, "have0", "1", "01");
    EXPECT_EQ(configDistance(pal, c, d), Rational(1));
}

TEST(TrajectoryLength, Examples) {
    const auto pal = load("palindrome.tm");
    const auto w = pal.word("010");
    EXPECT_EQ(trajectoryLength(pal, w, 0), Rational(0));
    const auto c0 = initialConfig(pal, w);
    EXPECT_EQ(trajectoryLength(pal, w, 1), configDistance(pal, c0, tmStep(pal, c0)));
}

TEST(TrajectoryLength, PerStepBoundSummation) {
    const auto pal = load("palindrome.tm");
    const auto p = fittedTimeMetricBound();
    for (const auto& w : oracle::binaryWords(5)) {
        const auto run = trace(pal, pal.word(w), 10000);
        Rational bound(0);
        for (std::size_t i = 0; i + 1 < run.size(); ++i) {
            bound += p(Rational(static_cast<long>(configLength(run[i]))));
        }
        EXPECT_LE(trajectoryLength(pal, pal.word(w), 10000), bound);
    }
}

TEST(AcceptsWithinLength, Examples) {
    const auto accept = load("immediate_accept.tm");
    const auto w = accept.word("01");
    EXPECT_FALSE(acceptsWithinLength(accept, w, Rational(0)));
    const auto c0 = initialConfig(accept, w);
    EXPECT_TRUE(acceptsWithinLength(accept, w, configDistance(accept, c0, tmStep(accept, c0))));

    const auto pal = load("palindrome.tm");
    const auto pw = pal.word("0110");
    const Rational ell = trajectoryLength(pal, pw, 10000);
    EXPECT_TRUE(acceptsWithinLength(pal, pw, ell));
    EXPECT_FALSE(acceptsWithinLength(pal, pw, ell - Rational::pow2(-200)));
    EXPECT_FALSE(acceptsWithinLength(pal, pal.word("01"), Rational(1000)));
    EXPECT_THROW(acceptsWithinLength(pal, pw, Rational(-1)), preach::DomainError);
}

TEST(TimeMetric, LinearBoundOnSimpleMachines) {
    const Polynomial p{{Rational(4), Rational(1)}};
    for (const char* name : {"immediate_accept.tm", "right_mover.tm"}) {
        const auto m = load(name);
        std::vector<Word> corpus;
        for (const auto& w : oracle::binaryWords(4)) corpus.push_back(m.word(w));
        const auto report = timeMetricCheck(m, corpus, p, 50);
        EXPECT_TRUE(report.ok()) << name;
        EXPECT_GT(report.pairsChecked, 0U);
    }
}

TEST(TimeMetric, FittedBoundOnFixtures) {
    const auto p = fittedTimeMetricBound();
    for (const char* name : {"immediate_accept.tm", "right_mover.tm", "palindrome.tm", "far_marker.tm"}) {
        const auto m = load(name);
        std::vector<Word> corpus;
        for (const auto& w : oracle::binaryWords(6)) corpus.push_back(m.word(w));
        const auto report = timeMetricCheck(m, corpus, p, 100);
        EXPECT_TRUE(report.ok()) << name << ": " << report.violations.size() << " violations";
    }
}

TEST(TimeMetric, ReportsViolations) {
    const auto pal = load("palindrome.tm");
    const std::vector<Word> corpus{pal.word("0110")};
    const Polynomial p{{Rational(4), Rational(1)}};

    const auto zero = timeMetricCheck(pal, corpus, p, 100,
                                      [](const Configuration&, const Configuration&) { return Rational(0); });
    ASSERT_FALSE(zero.ok());
    EXPECT_TRUE(zero.violations.front().lower);

    const auto huge = timeMetricCheck(pal, corpus, p, 100, [&](const Configuration& a, const Configuration& b) {
        return (configDistance(pal, a, b) + Rational(1)) * Rational::pow2(static_cast<long>(configLength(a)));
    });
    ASSERT_FALSE(huge.ok());
    EXPECT_FALSE(huge.violations.front().lower);

    EXPECT_THROW(timeMetricCheck(pal, {}, p, 10), preach::DomainError);
}

TEST(Polynomial, EvaluateAndPrint) {
    const Polynomial p{{Rational(4), Rational(1)}};
    EXPECT_EQ(p(Rational(3)), Rational(7));
    EXPECT_EQ(p.str(), "x + 4");
    EXPECT_EQ(fittedTimeMetricBound().str(), "x^3 + 3*x^2 + 3*x + 1");
    EXPECT_EQ(Polynomial{}.str(), "0");
    EXPECT_EQ((Polynomial{{Rational(0), Rational(1, 2)}}).str(), "1/2*x");
}
