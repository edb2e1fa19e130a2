#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preach/abstraction/graph.hpp"

namespace preach::reach {

using abstraction::CellId;

/// Closed target ball cB(center, 2^-p); a single point when p is absent.
struct Target {
    RatPoint center;
    std::optional<int> radiusExp;

    RatBox box() const;
    bool contains(const RatPoint& x) const { return boxContains(box(), x); }
};

/// Certificate of robust non-reachability: a set R* of grid cells at
/// resolution m containing x, closed under the 2^-epsExp perturbed step, and
/// disjoint from the target.
struct Witness {
    int m = 0;
    int epsExp = 0;
    /// Sorted in flat cell order.
    std::vector<CellId> cells;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Cells reachable in G_m from the cells containing x, at level 2^-m.
Witness extractWitness(const abstraction::AbstractionGraph& g, const RatPoint& x);

/// Same, from an explicit set of source cells.
Witness extractWitnessFrom(const abstraction::AbstractionGraph& g, std::span<const abstraction::FlatCell> sources);

struct WitnessCheck {
    bool ok = false;
    /// 0 when ok, else the first failing condition (1: source, 2: closure, 3: target).
    int failedCondition = 0;
    std::string reason;
};

/// Verifies, on the PAM itself rather than on any graph:
///  1. x lies in some member cell;
///  2. for every member cell V and piece i whose region meets V, every cell
///     meeting imageBox(V n P_i) grown by 2^-epsExp (clipped to the domain)
///     is a member;
///  3. no member cell meets the target.
/// Throws DomainError or DimensionError on a malformed witness.
WitnessCheck checkWitnessDetailed(const pam::PamSystem& sys, const Witness& w, const RatPoint& x, const Target& y);

bool checkWitness(const pam::PamSystem& sys, const Witness& w, const RatPoint& x, const RatPoint& y,
                  std::optional<int> p);

}  // namespace preach::reach
