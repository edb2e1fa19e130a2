#include "preach/tm/machine.hpp"

#include <algorithm>

#include "preach/error.hpp"

namespace preach::tm {

TuringMachine::TuringMachine(MachineDescription description) : desc_(std::move(description)) {
    if (desc_.states.empty()) {
        throw ParseError("machine has no states");
    }
    for (StateId q = 0; q < desc_.states.size(); ++q) {
        if (!stateIndex_.emplace(desc_.states[q], q).second) {
            throw ParseError("duplicate state '" + desc_.states[q] + "'");
        }
    }
    for (std::size_t i = 0; i < desc_.alphabet.size(); ++i) {
        const char c = desc_.alphabet[i];
        if (c == desc_.blank) {
            throw ParseError(std::string("blank symbol '") + c + "' listed in the alphabet");
        }
        if (std::count(desc_.alphabet.begin(), desc_.alphabet.end(), c) > 1) {
            throw ParseError(std::string("duplicate alphabet symbol '") + c + "'");
        }
    }
    if (desc_.alphabet.size() > 250) {
        throw ParseError("alphabet too large");
    }
    initial_ = stateId(desc_.initial);

    accepting_.assign(stateCount(), false);
    rejecting_.assign(stateCount(), false);
    for (const auto& name : desc_.accepting) {
        accepting_[stateId(name)] = true;
    }
    for (const auto& name : desc_.rejecting) {
        const StateId q = stateId(name);
        if (accepting_[q]) {
            throw ParseError("state '" + name + "' is both accepting and rejecting");
        }
        rejecting_[q] = true;
    }

    table_.assign(stateCount() * symbolCount(), std::nullopt);
    for (const auto& rule : desc_.rules) {
        const StateId from = stateId(rule.from);
        const StateId to = stateId(rule.to);
        const Symbol read = symbolOf(rule.read);
        const Symbol write = symbolOf(rule.write);
        auto& slot = table_[from * symbolCount() + read];
        if (slot) {
            throw ParseError("nondeterministic: two rules for (" + rule.from + ", " + rule.read + ")");
        }
        if (from == to && read == write && rule.move == Move::Stay) {
            throw ParseError("rule (" + rule.from + ", " + rule.read + ") -> itself with S does nothing");
        }
        if (accepting_[from] && !accepting_[to]) {
            throw ParseError("accepting state '" + rule.from + "' must stay accepting");
        }
        if (rejecting_[from] && !rejecting_[to]) {
            throw ParseError("rejecting state '" + rule.from + "' must stay rejecting");
        }
        slot = Transition{to, write, rule.move};
    }
}

StateId TuringMachine::stateId(std::string_view name) const {
    const auto it = stateIndex_.find(std::string(name));
    if (it == stateIndex_.end()) {
        throw ParseError("unknown state '" + std::string(name) + "'");
    }
    return it->second;
}

Symbol TuringMachine::symbolOf(char c) const {
    if (c == desc_.blank) {
        return kBlank;
    }
    const auto it = std::find(desc_.alphabet.begin(), desc_.alphabet.end(), c);
    if (it == desc_.alphabet.end()) {
        throw ParseError(std::string("unknown symbol '") + c + "'");
    }
    return static_cast<Symbol>(it - desc_.alphabet.begin() + 1);
}

Word TuringMachine::word(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        w.push_back(symbolOf(c));
    }
    return w;
}

std::string TuringMachine::render(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) {
        out.push_back(symbolChar(s));
    }
    return out;
}

}  // namespace preach::tm
