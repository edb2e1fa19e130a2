#include "preach/embed/encoding.hpp"

#include "preach/error.hpp"

namespace preach::embed {

EncodingScheme EncodingScheme::forMachine(const tm::TuringMachine& m, int base) {
    const int minimum = static_cast<int>(m.alphabetSize()) + 3;
    if (base == 0) {
        base = minimum;
    }
    if (base < minimum) {
        throw DomainError("encoding base " + std::to_string(base) + " below |Sigma|+3 = " +
                          std::to_string(minimum));
    }
    return EncodingScheme(base, m.stateCount(), m.symbolCount());
}

std::optional<tm::Symbol> EncodingScheme::symbolOfDigit(long d) const {
    if (d < 1 || d > static_cast<long>(symbolCount_)) {
        return std::nullopt;
    }
    return static_cast<tm::Symbol>(d - 1);
}

Rational encodeWordFrac(const EncodingScheme& scheme, const tm::Word& w) {
    const Rational k(scheme.base());
    Rational scale(1);
    Rational sum(0);
    for (tm::Symbol s : w) {
        scale /= k;
        sum += Rational(scheme.digit(s)) * scale;
    }
    return sum + scale / (k - Rational(1));
}

RatPoint encodeConfig(const EncodingScheme& scheme, const tm::Configuration& c) {
    return RatPoint{Rational(static_cast<long>(c.state) + 1), encodeWordFrac(scheme, c.left),
                    encodeWordFrac(scheme, c.right)};
}

tm::Word decodeWordFrac(const EncodingScheme& scheme, const Rational& v) {
    const Rational k(scheme.base());
    const Rational blankTail = Rational(1) / (k - Rational(1));
    // A valid encoding reaches the blank tail after at most as many digits as
    // the denominator has base-k digits; beyond that the expansion cannot end.
    const std::size_t bound = v.bitLength() + 2;
    tm::Word out;
    Rational rest = v;
    for (std::size_t i = 0; i <= bound; ++i) {
        if (rest == blankTail) {
            while (!out.empty() && out.back() == tm::kBlank) {
                out.pop_back();
            }
            return out;
        }
        const Rational scaled = rest * k;
        const long d = scaled.floor();
        const auto symbol = scheme.symbolOfDigit(d);
        if (!symbol || scaled == Rational(d)) {
            throw DecodeError(v.str() + " is not a tape encoding");
        }
        out.push_back(*symbol);
        rest = scaled - Rational(d);
    }
    throw DecodeError(v.str() + " is not a tape encoding");
}

tm::Configuration decodePoint(const EncodingScheme& scheme, const RatPoint& p) {
    if (p.dimension() != 3) {
        throw DecodeError("configuration encodings are points of Q^3");
    }
    if (!p[0].isInteger() || p[0] < Rational(1) ||
        p[0] > Rational(static_cast<long>(scheme.stateCount()))) {
        throw DecodeError(p[0].str() + " is not a state index");
    }
    tm::Configuration c{static_cast<tm::StateId>(p[0].floor() - 1), decodeWordFrac(scheme, p[1]),
                        decodeWordFrac(scheme, p[2])};
    return c;
}

}  // namespace preach::embed
