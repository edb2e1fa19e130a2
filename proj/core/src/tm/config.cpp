#include "preach/tm/config.hpp"

#include <algorithm>

namespace preach::tm {

namespace {

void trimBlanks(Word& w) {
    while (!w.empty() && w.back() == kBlank) {
        w.pop_back();
    }
}

Symbol popFront(Word& w) {
    if (w.empty()) {
        return kBlank;
    }
    const Symbol s = w.front();
    w.erase(w.begin());
    return s;
}

bool decided(const TuringMachine& m, StateId q) { return m.isHalting(q); }

}  // namespace

void Configuration::canonicalize() {
    trimBlanks(left);
    trimBlanks(right);
}

Configuration initialConfig(const TuringMachine& m, const Word& input) {
    Configuration c{m.initial(), {}, input};
    c.canonicalize();
    return c;
}

Configuration tmStep(const TuringMachine& m, const Configuration& c) {
    const auto& t = m.transition(c.state, c.head());
    if (!t) {
        if (m.isHalting(c.state)) {
            return c;
        }
        throw HaltError("no rule for state '" + m.stateName(c.state) + "' reading '" +
                        std::string(1, m.symbolChar(c.head())) + "'");
    }
    Configuration next{t->next, c.left, c.right};
    if (next.right.empty()) {
        next.right.push_back(kBlank);
    }
    next.right.front() = t->write;
    switch (t->move) {
        case Move::Stay:
            break;
        case Move::Right:
            next.left.insert(next.left.begin(), popFront(next.right));
            break;
        case Move::Left:
            next.right.insert(next.right.begin(), popFront(next.left));
            break;
    }
    next.canonicalize();
    return next;
}

Window truncate(const Configuration& c, std::size_t n) {
    Window w{c.state, Word(n, kBlank), Word(n + 1, kBlank)};
    std::copy_n(c.left.begin(), std::min(n, c.left.size()), w.left.begin());
    std::copy_n(c.right.begin(), std::min(n + 1, c.right.size()), w.right.begin());
    return w;
}

WindowSuccessors windowSuccessors(const TuringMachine& m, const Window& w) {
    WindowSuccessors out;
    const auto& t = m.transition(w.state, w.head());
    if (!t) {
        if (m.isHalting(w.state)) {
            out.windows.push_back(w);
        } else {
            out.halted = true;
        }
        return out;
    }
    Window base{t->next, w.left, w.right};
    base.right.front() = t->write;
    if (t->move == Move::Stay) {
        out.windows.push_back(std::move(base));
        return out;
    }
    const std::size_t n = w.left.size();
    for (std::size_t s = 0; s < m.symbolCount(); ++s) {
        Window next = base;
        const auto fresh = static_cast<Symbol>(s);
        if (t->move == Move::Right) {
            // Head cell joins the left part; a fresh cell enters on the right.
            next.left.insert(next.left.begin(), next.right.front());
            next.right.erase(next.right.begin());
            next.right.push_back(fresh);
            if (n == 0) {
                next.left.clear();
            } else {
                next.left.pop_back();
            }
        } else {
            // The nearest left cell becomes the head; a fresh cell enters on the left.
            if (n == 0) {
                next.right.insert(next.right.begin(), fresh);
            } else {
                next.right.insert(next.right.begin(), next.left.front());
                next.left.erase(next.left.begin());
                next.left.push_back(fresh);
            }
            next.right.pop_back();
        }
        out.windows.push_back(std::move(next));
    }
    return out;
}

RunResult tmRun(const TuringMachine& m, const Word& input, std::size_t tMax) {
    Configuration c = initialConfig(m, input);
    for (std::size_t t = 0;; ++t) {
        if (m.isAccepting(c.state)) {
            return {Outcome::Accept, t, std::move(c)};
        }
        if (m.isRejecting(c.state)) {
            return {Outcome::Reject, t, std::move(c)};
        }
        if (t == tMax) {
            return {Outcome::Running, t, std::move(c)};
        }
        if (!m.transition(c.state, c.head())) {
            return {Outcome::Stuck, t, std::move(c)};
        }
        c = tmStep(m, c);
    }
}

std::vector<Configuration> trace(const TuringMachine& m, const Word& input, std::size_t tMax) {
    std::vector<Configuration> out{initialConfig(m, input)};
    while (out.size() <= tMax) {
        const Configuration& c = out.back();
        if (decided(m, c.state) || !m.transition(c.state, c.head())) {
            break;
        }
        out.push_back(tmStep(m, c));
    }
    return out;
}

std::size_t spaceUsed(const TuringMachine& m, const Word& input, std::size_t tMax) {
    const auto run = trace(m, input, tMax);
    long pos = 0;
    long lo = 0;
    long hi = 0;
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        const auto& t = m.transition(run[i].state, run[i].head());
        pos += static_cast<long>(t->move);
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
    }
    return static_cast<std::size_t>(hi - lo + 1);
}

}  // namespace preach::tm
