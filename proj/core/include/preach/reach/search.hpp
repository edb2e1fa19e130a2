#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "preach/abstraction/graph.hpp"

namespace preach::reach {

using abstraction::AbstractionGraph;
using abstraction::FlatCell;

/// Cells reachable from src in zero or more steps. Sorted.
std::vector<FlatCell> graphReachBFS(const AbstractionGraph& g, std::span<const FlatCell> src);

/// Breadth-first tree from src: parent of every reached cell (sources map to themselves).
std::unordered_map<FlatCell, FlatCell> bfsTree(const AbstractionGraph& g, std::span<const FlatCell> src);

/// Shortest path with at least one edge from some source to some target,
/// listed source first.
std::optional<std::vector<FlatCell>> shortestPath(const AbstractionGraph& g, std::span<const FlatCell> src,
                                                  std::span<const FlatCell> targets);

struct SavitchStats {
    int depthLimit = 0;
    int maxDepth = 0;
    std::uint64_t edgeQueries = 0;
};

/// Path u ->* v by the midpoint recursion CANYIELD(u, v, t) with
/// t = ceil(log2 |V|) + 1: a path of length at most 2^t exists iff some
/// midpoint w splits it into two halves of length at most 2^(t-1). Midpoints
/// are tried in flat cell order; at t = 1 only successors of u are tried.
/// Memory is the recursion stack, independent of |V|. Throws InvariantError
/// if the recursion ever goes deeper than t.
bool pathSavitch(const AbstractionGraph& g, FlatCell u, FlatCell v, SavitchStats* stats = nullptr);

int savitchDepthLimit(std::uint64_t cellCount);

}  // namespace preach::reach
