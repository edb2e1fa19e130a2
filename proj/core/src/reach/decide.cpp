#include "preach/reach/decide.hpp"

#include <algorithm>

#include "preach/error.hpp"
#include "preach/reach/search.hpp"

namespace preach::reach {

std::string ReachVerdict::name() const {
    switch (result.index()) {
        case 0:
            return "reached";
        case 1:
            return "robustly-unreachable";
        default:
            return "unknown";
    }
}

namespace {

void requireInDomain(const pam::PamSystem& sys, const RatPoint& p, const char* what) {
    requireSameDimension(p.dimension(), sys.dimension(), what);
    if (!boxContains(sys.domain(), p)) {
        throw DomainError(std::string(what) + " " + p.str() + " outside the domain " + sys.domain().str());
    }
}

bool disjoint(const std::vector<abstraction::FlatCell>& sortedA, const std::vector<abstraction::FlatCell>& sortedB) {
    auto a = sortedA.begin();
    auto b = sortedB.begin();
    while (a != sortedA.end() && b != sortedB.end()) {
        if (*a == *b) {
            return false;
        }
        (*a < *b) ? ++a : ++b;
    }
    return true;
}

/// Exact forward simulation, extended on demand.
class Simulation {
public:
    Simulation(const pam::PamSystem& sys, const RatPoint& x) : sys_(sys), points_{x} {}

    /// Advances to `steps` steps; returns the index of the first point in the target, if any.
    std::optional<std::size_t> advance(std::size_t steps, const RatBox& target) {
        while (checked_ < points_.size()) {
            if (boxContains(target, points_[checked_])) {
                return checked_;
            }
            ++checked_;
        }
        while (stop_.empty() && points_.size() <= steps) {
            try {
                points_.push_back(pam::evalPam(sys_, points_.back()));
            } catch (const UndefinedError&) {
                stop_ = "undefined at " + points_.back().str();
                break;
            } catch (const EscapeError&) {
                stop_ = "image of " + points_.back().str() + " leaves the domain";
                break;
            }
            ++checked_;
            if (boxContains(target, points_.back())) {
                return points_.size() - 1;
            }
        }
        return std::nullopt;
    }

    std::size_t steps() const { return points_.size() - 1; }
    const std::string& stop() const { return stop_; }
    const std::vector<RatPoint>& points() const { return points_; }

private:
    const pam::PamSystem& sys_;
    std::vector<RatPoint> points_;
    std::size_t checked_ = 0;
    std::string stop_;
};

}  // namespace

ReachVerdict decideOmegaReach(const pam::PamSystem& sys, const RatPoint& x, const Target& y, int maxM,
                              std::size_t maxSteps) {
    requireInDomain(sys, x, "source");
    requireInDomain(sys, y.center, "target");
    if (maxM < 0 || (y.radiusExp && *y.radiusExp < 0)) {
        throw DomainError("maxM and p must be nonnegative");
    }
    const RatBox target = y.box();
    BudgetReport budget;
    budget.maxM = maxM;
    budget.maxSteps = maxSteps;
    Simulation sim(sys, x);

    for (int r = 0;; ++r) {
        const std::size_t stepBudget = r < 63 ? std::min<std::size_t>(std::size_t{1} << r, maxSteps) : maxSteps;
        if (const auto hit = sim.advance(stepBudget, target)) {
            budget.stepsSimulated = sim.steps();
            std::vector<RatPoint> traj(sim.points().begin(), sim.points().begin() + static_cast<long>(*hit) + 1);
            return {Reached{std::move(traj), *hit}, budget};
        }
        budget.stepsSimulated = sim.steps();
        budget.simulationStop = sim.stop();

        if (r <= maxM) {
            const abstraction::AbstractionGraph g(sys, r);
            budget.lastResolution = r;
            const auto sources = g.grid().cellsContaining(x);
            const auto goal = g.grid().cellsIntersecting(target);

            std::vector<std::vector<abstraction::FlatCell>> attempts{sources};
            if (sources.size() > 1) {
                for (auto s : sources) {
                    attempts.push_back({s});
                }
            }
            for (const auto& from : attempts) {
                const auto reached = graphReachBFS(g, from);
                if (!disjoint(reached, goal)) {
                    continue;
                }
                Witness w = extractWitnessFrom(g, from);
                if (checkWitnessDetailed(sys, w, x, y).ok) {
                    return {RobustlyUnreachable{std::move(w)}, budget};
                }
                ++budget.witnessesRejected;
            }
        }

        const bool simulationDone = !sim.stop().empty() || sim.steps() >= maxSteps;
        if (r >= maxM && simulationDone) {
            return {Unknown{}, budget};
        }
    }
}

bool verifyReached(const pam::PamSystem& sys, const Reached& r, const RatPoint& x, const Target& y) {
    if (r.trajectory.empty() || r.trajectory.size() != r.steps + 1 || !(r.trajectory.front() == x)) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < r.trajectory.size(); ++i) {
        const auto next = pam::tryEvalPam(sys, r.trajectory[i]);
        if (!next || !(*next == r.trajectory[i + 1])) {
            return false;
        }
    }
    return y.contains(r.trajectory.back());
}

DeltaDecision decidePerturbedInterval(const pam::PamSystem& sys, const RatPoint& x, const Target& y, int n) {
    requireInDomain(sys, x, "source");
    requireInDomain(sys, y.center, "target");
    if (n < 0) {
        throw DomainError("n must be nonnegative");
    }
    if (y.contains(x)) {
        return TrueAtEps{n};
    }
    const int m = abstraction::resolutionForEps(sys.lipschitz(), n);
    const abstraction::AbstractionGraph g(sys, m);
    const auto goal = g.grid().cellsIntersecting(y.box());
    for (auto s : g.grid().cellsContaining(x)) {
        const std::vector<abstraction::FlatCell> from{s};
        if (!shortestPath(g, from, goal)) {
            Witness w = extractWitnessFrom(g, from);
            if (!checkWitnessDetailed(sys, w, x, y).ok) {
                return FalseAtEps{m, std::nullopt};
            }
            return FalseAtEps{m, std::move(w)};
        }
    }
    return TrueAtEps{n};
}

}  // namespace preach::reach
