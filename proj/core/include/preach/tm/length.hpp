#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "preach/numerics/rational.hpp"
#include "preach/tm/config.hpp"

namespace preach::tm {

/// Polynomial with rational coefficients, lowest degree first.
struct Polynomial {
    std::vector<Rational> coeffs;

    Rational operator()(const Rational& x) const;
    std::string str() const;
};

/// Bound p fitted to the encoding-backed distance on the fixture machines
/// (runs of at most 100 steps on words of length at most 6). Consecutive
/// distances shrink like k^-len on uniform tape blocks, so no single
/// polynomial bounds them for all lengths; this one covers the measured range.
Polynomial fittedTimeMetricBound();

/// |left| + |right| + 1 for the canonical configuration.
std::size_t configLength(const Configuration& c);

/// Sup-norm distance between the encodings of c and c' under the default scheme.
Rational configDistance(const TuringMachine& m, const Configuration& c, const Configuration& c2);

using DistanceFn = std::function<Rational(const Configuration&, const Configuration&)>;

/// Sum of configDistance over consecutive configurations of the exact run
/// prefix (at most tMax steps, stopping at a decision or a missing rule).
Rational trajectoryLength(const TuringMachine& m, const Word& input, std::size_t tMax);

/// Accepted, with trajectory length up to the accepting step at most ell.
/// Runs at most stepCap steps.
bool acceptsWithinLength(const TuringMachine& m, const Word& input, const Rational& ell,
                         std::size_t stepCap = std::size_t{1} << 20);

struct TimeMetricViolation {
    std::string word;
    std::size_t step;
    Configuration from;
    Configuration to;
    Rational distance;
    Rational bound;
    bool lower;
};

struct TimeMetricReport {
    std::size_t pairsChecked = 0;
    std::vector<TimeMetricViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks 1/p(length(C)) <= d(C, C') <= p(length(C)) on every consecutive
/// pair of every run (at most maxSteps steps per word).
TimeMetricReport timeMetricCheck(const TuringMachine& m, const std::vector<Word>& corpus,
                                 const Polynomial& p, std::size_t maxSteps, const DistanceFn& distance = {});

}  // namespace preach::tm
