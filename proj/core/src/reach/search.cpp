#include "preach/reach/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "preach/error.hpp"

namespace preach::reach {

std::vector<FlatCell> graphReachBFS(const AbstractionGraph& g, std::span<const FlatCell> src) {
    const auto tree = bfsTree(g, src);
    std::vector<FlatCell> out;
    out.reserve(tree.size());
    for (const auto& [cell, parent] : tree) {
        out.push_back(cell);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::unordered_map<FlatCell, FlatCell> bfsTree(const AbstractionGraph& g, std::span<const FlatCell> src) {
    std::unordered_map<FlatCell, FlatCell> parent;
    std::deque<FlatCell> queue;
    for (FlatCell s : src) {
        if (parent.emplace(s, s).second) {
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const FlatCell v = queue.front();
        queue.pop_front();
        for (FlatCell w : g.successors(v)) {
            if (parent.emplace(w, v).second) {
                queue.push_back(w);
            }
        }
    }
    return parent;
}

std::optional<std::vector<FlatCell>> shortestPath(const AbstractionGraph& g, std::span<const FlatCell> src,
                                                  std::span<const FlatCell> targets) {
    const std::unordered_set<FlatCell> goal(targets.begin(), targets.end());
    // Search starts from the successors of the sources, so a source that is
    // also a target still needs at least one edge.
    std::unordered_map<FlatCell, std::pair<FlatCell, std::size_t>> parent;
    std::deque<FlatCell> queue;
    for (FlatCell s : src) {
        for (FlatCell w : g.successors(s)) {
            if (parent.emplace(w, std::make_pair(s, std::size_t{1})).second) {
                queue.push_back(w);
            }
        }
    }
    while (!queue.empty()) {
        const FlatCell v = queue.front();
        queue.pop_front();
        const std::size_t depth = parent.at(v).second;
        if (goal.contains(v)) {
            std::vector<FlatCell> path{v};
            FlatCell cur = v;
            for (std::size_t i = 0; i < depth; ++i) {
                cur = parent.at(cur).first;
                path.push_back(cur);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (FlatCell w : g.successors(v)) {
            if (parent.emplace(w, std::make_pair(v, depth + 1)).second) {
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

int savitchDepthLimit(std::uint64_t cellCount) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < cellCount) {
        ++bits;
    }
    return bits + 1;
}

namespace {

struct Savitch {
    const AbstractionGraph& g;
    SavitchStats& stats;
    std::uint64_t cells;

    bool edge(FlatCell a, FlatCell b) {
        ++stats.edgeQueries;
        return g.hasEdge(a, b);
    }

    bool canYield(FlatCell a, FlatCell b, int t, int depth) {
        if (depth > stats.depthLimit) {
            throw InvariantError("CANYIELD recursion deeper than its bound");
        }
        stats.maxDepth = std::max(stats.maxDepth, depth);
        if (a == b) {
            return true;
        }
        if (t == 0) {
            return edge(a, b);
        }
        if (edge(a, b)) {
            return true;
        }
        if (t == 1) {
            for (FlatCell w : g.successors(a)) {
                if (w != a && w != b && canYield(w, b, 0, depth + 1)) {
                    return true;
                }
            }
            return false;
        }
        for (FlatCell w = 0; w < cells; ++w) {
            if (w == a || w == b) {
                continue;
            }
            if (canYield(a, w, t - 1, depth + 1) && canYield(w, b, t - 1, depth + 1)) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

bool pathSavitch(const AbstractionGraph& g, FlatCell u, FlatCell v, SavitchStats* stats) {
    SavitchStats local;
    SavitchStats& s = stats != nullptr ? *stats : local;
    const std::uint64_t cells = g.grid().cellCount();
    if (u >= cells || v >= cells) {
        throw DomainError("cell index out of range");
    }
    s = SavitchStats{};
    s.depthLimit = savitchDepthLimit(cells);
    Savitch search{g, s, cells};
    return search.canYield(u, v, s.depthLimit, 0);
}

}  // namespace preach::reach
