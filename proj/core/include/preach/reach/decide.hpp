#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preach/reach/witness.hpp"

namespace preach::reach {

struct BudgetReport {
    int maxM = 0;
    std::size_t maxSteps = 0;
    /// Finest resolution whose graph was searched, -1 if none.
    int lastResolution = -1;
    std::size_t stepsSimulated = 0;
    /// Why simulation stopped early (undefined region, escape), empty otherwise.
    std::string simulationStop;
    int witnessesRejected = 0;
};

struct Reached {
    /// x_0 = x, x_{t+1} = f(x_t); the last point is in the target.
    std::vector<RatPoint> trajectory;
    std::size_t steps = 0;
};

struct RobustlyUnreachable {
    Witness witness;
};

struct Unknown {};

struct ReachVerdict {
    std::variant<Reached, RobustlyUnreachable, Unknown> result;
    BudgetReport budget;

    /// "reached", "robustly-unreachable" or "unknown".
    std::string name() const;
};

/// Interleaves exact simulation with NOPATH searches. Round r = 0, 1, ...
/// first extends the simulation to min(2^r, maxSteps) steps, then (for
/// r <= maxM) searches G_r. A NOPATH is accepted only after checkWitness
/// confirms the extracted set; otherwise the next round refines.
ReachVerdict decideOmegaReach(const pam::PamSystem& sys, const RatPoint& x, const Target& y, int maxM,
                              std::size_t maxSteps);

/// Replays a Reached trajectory with exact evaluation.
bool verifyReached(const pam::PamSystem& sys, const Reached& r, const RatPoint& x, const Target& y);

struct TrueAtEps {
    int n;
};

struct FalseAtEps {
    int m;
    /// Reach set of the failing source cell when it also passes checkWitness.
    std::optional<Witness> witness;
};

using DeltaDecision = std::variant<TrueAtEps, FalseAtEps>;

/// Two-sided decision at m = resolutionForEps(L, n): FalseAtEps(2^-m) when a
/// cell of x has no path of at least one step into the cells meeting the
/// target (so the 2^-m perturbed system cannot reach it), TrueAtEps(2^-n)
/// otherwise (x already in the target, or a graph path that the 2^-n
/// perturbed system can follow).
DeltaDecision decidePerturbedInterval(const pam::PamSystem& sys, const RatPoint& x, const Target& y, int n);

}  // namespace preach::reach
