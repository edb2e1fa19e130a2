#pragma once

#include <cstddef>
#include <vector>

#include "preach/error.hpp"
#include "preach/tm/machine.hpp"

namespace preach::tm {

/// The machine stopped in a state that is neither accepting nor rejecting
/// because no rule applies.
class HaltError : public Error {
public:
    using Error::Error;
};

/// Exact configuration. `left` lists the cells left of the head nearest
/// first; `right` starts with the head cell. Trailing blanks are trimmed on
/// both words so equal configurations compare equal.
struct Configuration {
    StateId state = 0;
    Word left;
    Word right;

    Symbol head() const { return right.empty() ? kBlank : right.front(); }
    void canonicalize();

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Tape view of radius n around the head: exactly n cells on the left
/// (nearest first) and n+1 cells from the head rightwards.
struct Window {
    StateId state = 0;
    Word left;
    Word right;

    Symbol head() const { return right.front(); }

    friend bool operator==(const Window&, const Window&) = default;
};

Configuration initialConfig(const TuringMachine& m, const Word& input);

/// One exact step. Halting states without a rule are absorbing and return the
/// configuration unchanged. Throws HaltError when a non-halting state has no rule.
Configuration tmStep(const TuringMachine& m, const Configuration& c);

Window truncate(const Configuration& c, std::size_t n);

struct WindowSuccessors {
    std::vector<Window> windows;
    /// Set when no rule applies to a non-halting state.
    bool halted = false;
};

/// One step of the n-perturbed machine seen through the window: the cell
/// entering the window at the far end may hold any symbol of Sigma or blank.
WindowSuccessors windowSuccessors(const TuringMachine& m, const Window& w);

enum class Outcome { Accept, Reject, Running, Stuck };

struct RunResult {
    Outcome outcome;
    /// Steps taken when the outcome was reached (tMax for Running).
    std::size_t steps;
    Configuration last;
};

/// Runs from C0[w] until the first accepting or rejecting state, a missing
/// rule (Stuck), or tMax steps.
RunResult tmRun(const TuringMachine& m, const Word& input, std::size_t tMax);

/// Configurations C0..CT of the exact run, stopping at the first decision,
/// at a missing rule, or after tMax steps.
std::vector<Configuration> trace(const TuringMachine& m, const Word& input, std::size_t tMax);

/// Number of distinct cells under the head during the first tMax steps
/// (or until the run decides or gets stuck).
std::size_t spaceUsed(const TuringMachine& m, const Word& input, std::size_t tMax);

}  // namespace preach::tm
