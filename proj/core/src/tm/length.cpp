#include "preach/tm/length.hpp"

#include <sstream>

#include "preach/embed/encoding.hpp"

namespace preach::tm {

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string Polynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].sign() == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        if (i == 0 || coeffs[i] != Rational(1)) {
            os << coeffs[i] << (i > 0 ? "*" : "");
        }
        if (i > 0) {
            os << "x";
            if (i > 1) {
                os << '^' << i;
            }
        }
    }
    return first ? "0" : os.str();
}

Polynomial fittedTimeMetricBound() {
    // (x+1)^3. Worst measured case: palindrome.tm, length 6, d = 5^-3.
    return {{1, 3, 3, 1}};
}

std::size_t configLength(const Configuration& c) { return c.left.size() + c.right.size() + 1; }

Rational configDistance(const TuringMachine& m, const Configuration& c, const Configuration& c2) {
    const auto scheme = embed::EncodingScheme::forMachine(m);
    return supDist(embed::encodeConfig(scheme, c), embed::encodeConfig(scheme, c2));
}

Rational trajectoryLength(const TuringMachine& m, const Word& input, std::size_t tMax) {
    const auto scheme = embed::EncodingScheme::forMachine(m);
    const auto run = trace(m, input, tMax);
    Rational total(0);
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        total += supDist(embed::encodeConfig(scheme, run[i]), embed::encodeConfig(scheme, run[i + 1]));
    }
    return total;
}

bool acceptsWithinLength(const TuringMachine& m, const Word& input, const Rational& ell, std::size_t stepCap) {
    if (ell.sign() < 0) {
        throw DomainError("length bound must be nonnegative");
    }
    const auto scheme = embed::EncodingScheme::forMachine(m);
    Configuration c = initialConfig(m, input);
    RatPoint point = embed::encodeConfig(scheme, c);
    Rational total(0);
    for (std::size_t t = 0;; ++t) {
        if (m.isAccepting(c.state)) {
            return true;
        }
        if (m.isRejecting(c.state) || t == stepCap || !m.transition(c.state, c.head())) {
            return false;
        }
        c = tmStep(m, c);
        RatPoint next = embed::encodeConfig(scheme, c);
        total += supDist(point, next);
        if (total > ell) {
            return false;
        }
        point = std::move(next);
    }
}

TimeMetricReport timeMetricCheck(const TuringMachine& m, const std::vector<Word>& corpus, const Polynomial& p,
                                 std::size_t maxSteps, const DistanceFn& distance) {
    if (corpus.empty()) {
        throw DomainError("time-metric corpus is empty");
    }
    const DistanceFn dist = distance ? distance : [&m](const Configuration& a, const Configuration& b) {
        return configDistance(m, a, b);
    };
    TimeMetricReport report;
    for (const Word& w : corpus) {
        const auto run = trace(m, w, maxSteps);
        for (std::size_t i = 0; i + 1 < run.size(); ++i) {
            const Rational d = dist(run[i], run[i + 1]);
            const Rational bound = p(Rational(static_cast<long>(configLength(run[i]))));
            ++report.pairsChecked;
            if (bound.sign() <= 0 || d * bound < Rational(1)) {
                report.violations.push_back({m.render(w), i, run[i], run[i + 1], d, bound, true});
            } else if (d > bound) {
                report.violations.push_back({m.render(w), i, run[i], run[i + 1], d, bound, false});
            }
        }
    }
    return report;
}

}  // namespace preach::tm
