#include "preach/tm/perturbed.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>

namespace preach::tm {

namespace {

struct PackedKey {
    std::uint64_t operator()(const Window& w, std::size_t base) const {
        std::uint64_t key = w.state;
        for (Symbol s : w.left) {
            key = key * base + s;
        }
        for (Symbol s : w.right) {
            key = key * base + s;
        }
        return key;
    }
};

struct StringKey {
    std::string operator()(const Window& w, std::size_t) const {
        std::string key(reinterpret_cast<const char*>(&w.state), sizeof(w.state));
        key.append(w.left.begin(), w.left.end());
        key.append(w.right.begin(), w.right.end());
        return key;
    }
};

template <typename KeyFn>
SpaceSearch bfs(const TuringMachine& m, const Window& start) {
    using Key = decltype(KeyFn{}(start, 0));
    const KeyFn keyOf;
    const std::size_t base = m.symbolCount();

    SpaceSearch out;
    std::unordered_set<Key> seen{keyOf(start, base)};
    std::deque<std::pair<Window, std::size_t>> queue{{start, 0}};
    while (!queue.empty()) {
        auto [w, depth] = std::move(queue.front());
        queue.pop_front();
        ++out.windowsVisited;
        if (m.isAccepting(w.state)) {
            out.accepted = true;
            out.acceptDepth = depth;
            return out;
        }
        for (auto& next : windowSuccessors(m, w).windows) {
            if (seen.insert(keyOf(next, base)).second) {
                queue.emplace_back(std::move(next), depth + 1);
            }
        }
    }
    return out;
}

}  // namespace

SpaceSearch searchSpacePerturbed(const TuringMachine& m, const Word& input, std::size_t n) {
    if (n == 0) {
        throw DomainError("space perturbation radius must be at least 1");
    }
    const Window start = truncate(initialConfig(m, input), n);
    const double bits = static_cast<double>(2 * n + 1) * std::log2(static_cast<double>(m.symbolCount())) +
                        std::log2(static_cast<double>(m.stateCount()));
    if (bits < 63.0) {
        return bfs<PackedKey>(m, start);
    }
    return bfs<StringKey>(m, start);
}

bool acceptsSpacePerturbed(const TuringMachine& m, const Word& input, std::size_t n) {
    return searchSpacePerturbed(m, input, n).accepted;
}

bool acceptsTimePerturbed(const TuringMachine& m, const Word& input, std::size_t n) {
    const RunResult run = tmRun(m, input, n);
    switch (run.outcome) {
        case Outcome::Accept:
            return true;
        case Outcome::Reject:
            return false;
        case Outcome::Running:
        case Outcome::Stuck:
            break;
    }
    for (StateId q = 0; q < m.stateCount(); ++q) {
        if (m.isAccepting(q)) {
            return true;
        }
    }
    return false;
}

}  // namespace preach::tm
