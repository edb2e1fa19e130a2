#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace preach::tm {

/// Tape symbol: 0 is the blank, 1..|Sigma| index the alphabet in declaration order.
using Symbol = std::uint8_t;
inline constexpr Symbol kBlank = 0;

using StateId = std::uint32_t;
using Word = std::vector<Symbol>;

enum class Move : std::int8_t { Left = -1, Stay = 0, Right = 1 };

struct Transition {
    StateId next;
    Symbol write;
    Move move;
};

/// Name-level description of a machine, as read from a machine file.
struct MachineDescription {
    struct Rule {
        std::string from;
        char read;
        std::string to;
        char write;
        Move move;
    };

    std::vector<std::string> states;
    std::vector<char> alphabet;
    char blank = '_';
    std::string initial;
    std::vector<std::string> accepting;
    std::vector<std::string> rejecting;
    std::vector<Rule> rules;
};

/// Deterministic single-tape machine over a bi-infinite tape.
///
/// Construction validates: accepting and rejecting sets are disjoint, they
/// are closed under transitions, at most one rule per (state, symbol), and
/// no rule leaves the configuration untouched ((q,a) -> (q,a,S)).
/// Halting states without explicit rules are absorbing.
class TuringMachine {
public:
    explicit TuringMachine(MachineDescription description);

    std::size_t stateCount() const { return desc_.states.size(); }
    /// |Sigma|, blank excluded.
    std::size_t alphabetSize() const { return desc_.alphabet.size(); }
    /// |Sigma| + 1.
    std::size_t symbolCount() const { return desc_.alphabet.size() + 1; }

    StateId initial() const { return initial_; }
    bool isAccepting(StateId q) const { return accepting_[q]; }
    bool isRejecting(StateId q) const { return rejecting_[q]; }
    bool isHalting(StateId q) const { return accepting_[q] || rejecting_[q]; }

    const std::optional<Transition>& transition(StateId q, Symbol a) const {
        return table_[q * symbolCount() + a];
    }

    const std::string& stateName(StateId q) const { return desc_.states[q]; }
    StateId stateId(std::string_view name) const;
    char symbolChar(Symbol s) const { return s == kBlank ? desc_.blank : desc_.alphabet[s - 1]; }
    Symbol symbolOf(char c) const;

    /// Converts text over Sigma (blank character allowed) to symbols.
    Word word(std::string_view text) const;
    std::string render(const Word& w) const;

    const MachineDescription& description() const { return desc_; }

private:
    MachineDescription desc_;
    std::unordered_map<std::string, StateId> stateIndex_;
    StateId initial_ = 0;
    std::vector<bool> accepting_;
    std::vector<bool> rejecting_;
    std::vector<std::optional<Transition>> table_;
};

}  // namespace preach::tm
