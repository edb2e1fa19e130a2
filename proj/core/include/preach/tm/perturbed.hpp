#pragma once

#include <cstddef>
#include <optional>

#include "preach/tm/config.hpp"

namespace preach::tm {

struct SpaceSearch {
    bool accepted = false;
    std::size_t windowsVisited = 0;
    /// Steps on a shortest accepting window path.
    std::optional<std::size_t> acceptDepth;
};

/// Breadth-first search of the window graph of radius n from truncate(C0[w], n)
/// to any window in an accepting state. Requires n >= 1.
SpaceSearch searchSpacePerturbed(const TuringMachine& m, const Word& input, std::size_t n);

/// Membership of w in L_n(M), the language of the space-perturbed machine.
bool acceptsSpacePerturbed(const TuringMachine& m, const Word& input, std::size_t n);

/// Membership of w in L^n(M). After time n the control state of an undecided
/// configuration may be replaced by any state, so the answer is: accepted
/// within n steps, or undecided after n steps (stuck runs included) while
/// some accepting state exists.
bool acceptsTimePerturbed(const TuringMachine& m, const Word& input, std::size_t n);

}  // namespace preach::tm
