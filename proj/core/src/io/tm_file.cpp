#include "preach/io/tm_file.hpp"

#include <sstream>
#include <vector>

#include "preach/error.hpp"
#include "preach/io/pam_file.hpp"

namespace preach::io {

namespace {

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

char symbolToken(const std::string& t, std::size_t line) {
    if (t.size() != 1) {
        throw ParseError("line " + std::to_string(line) + ": symbol '" + t + "' must be one character");
    }
    return t[0];
}

}  // namespace

tm::MachineDescription parseTmDescription(const std::string& text) {
    tm::MachineDescription d;
    bool seenStates = false, seenAlphabet = false, seenBlank = false, seenInitial = false;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto arrow = raw.find("->");
        const auto colon = raw.find(':');
        if (arrow != std::string::npos) {
            const auto lhs = tokens(raw.substr(0, arrow));
            const auto rhs = tokens(raw.substr(arrow + 2));
            if (lhs.size() != 2 || rhs.size() != 3) {
                throw ParseError("line " + std::to_string(line) + ": expected 'q a -> q' b L|R|S'");
            }
            tm::Move move;
            if (rhs[2] == "L") {
                move = tm::Move::Left;
            } else if (rhs[2] == "R") {
                move = tm::Move::Right;
            } else if (rhs[2] == "S") {
                move = tm::Move::Stay;
            } else {
                throw ParseError("line " + std::to_string(line) + ": move must be L, R or S");
            }
            d.rules.push_back({lhs[0], symbolToken(lhs[1], line), rhs[0], symbolToken(rhs[1], line), move});
            continue;
        }
        if (colon == std::string::npos) {
            if (!tokens(raw).empty()) {
                throw ParseError("line " + std::to_string(line) + ": expected 'key: values' or a rule");
            }
            continue;
        }
        const auto key = tokens(raw.substr(0, colon));
        const auto values = tokens(raw.substr(colon + 1));
        if (key.size() != 1) {
            throw ParseError("line " + std::to_string(line) + ": malformed key");
        }
        const std::string& k = key[0];
        auto single = [&]() -> const std::string& {
            if (values.size() != 1) {
                throw ParseError("line " + std::to_string(line) + ": '" + k + "' takes exactly one value");
            }
            return values[0];
        };
        if (k == "states") {
            d.states = values;
            seenStates = true;
        } else if (k == "alphabet") {
            for (const auto& v : values) {
                d.alphabet.push_back(symbolToken(v, line));
            }
            seenAlphabet = true;
        } else if (k == "blank") {
            d.blank = symbolToken(single(), line);
            seenBlank = true;
        } else if (k == "initial") {
            d.initial = single();
            seenInitial = true;
        } else if (k == "accept") {
            d.accepting = values;
        } else if (k == "reject") {
            d.rejecting = values;
        } else {
            throw ParseError("line " + std::to_string(line) + ": unknown key '" + k + "'");
        }
    }
    if (!seenStates || !seenAlphabet || !seenBlank || !seenInitial) {
        throw ParseError("machine needs states, alphabet, blank and initial");
    }
    return d;
}

tm::TuringMachine parseTmText(const std::string& text) { return tm::TuringMachine(parseTmDescription(text)); }

tm::TuringMachine parseTmFile(const std::filesystem::path& path) { return parseTmText(readTextFile(path)); }

std::string serializeTm(const tm::TuringMachine& m) {
    const auto& d = m.description();
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            out += ' ' + s;
        }
        return out;
    };
    std::string out = "states:" + join(d.states) + "\nalphabet:";
    for (char c : d.alphabet) {
        out += ' ';
        out += c;
    }
    out += "\nblank: " + std::string(1, d.blank) + "\ninitial: " + d.initial + "\naccept:" + join(d.accepting) +
           "\nreject:" + join(d.rejecting) + "\n";
    for (const auto& r : d.rules) {
        const char mv = r.move == tm::Move::Left ? 'L' : (r.move == tm::Move::Right ? 'R' : 'S');
        out += r.from + ' ' + r.read + " -> " + r.to + ' ' + r.write + ' ' + mv + '\n';
    }
    return out;
}

}  // namespace preach::io
