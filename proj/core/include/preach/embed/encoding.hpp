#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "preach/numerics/geometry.hpp"
#include "preach/tm/config.hpp"

namespace preach::embed {

/// Base-k fractional encoding of tape words. The blank is digit 1 and symbol
/// i of the alphabet is digit i+1, so every digit lies in [1, k-2] and an
/// encoding never sits on the boundary of its leading-digit interval.
class EncodingScheme {
public:
    /// Default base |Sigma|+3; a larger base may be requested.
    static EncodingScheme forMachine(const tm::TuringMachine& m, int base = 0);

    int base() const { return base_; }
    std::size_t stateCount() const { return stateCount_; }
    std::size_t symbolCount() const { return symbolCount_; }

    int digit(tm::Symbol s) const { return static_cast<int>(s) + 1; }
    /// Symbol with the given digit, nullopt for digits outside the map.
    std::optional<tm::Symbol> symbolOfDigit(long d) const;

private:
    EncodingScheme(int base, std::size_t states, std::size_t symbols)
        : base_(base), stateCount_(states), symbolCount_(symbols) {}

    int base_;
    std::size_t stateCount_;
    std::size_t symbolCount_;
};

/// sum_i digit(a_i) k^-(i+1) plus the infinite blank tail k^-N / (k-1).
Rational encodeWordFrac(const EncodingScheme& scheme, const tm::Word& w);

/// (state index starting at 1, encoded left word, encoded right word).
RatPoint encodeConfig(const EncodingScheme& scheme, const tm::Configuration& c);

/// Inverse of encodeWordFrac on its image. Throws DecodeError otherwise.
tm::Word decodeWordFrac(const EncodingScheme& scheme, const Rational& v);

/// Inverse of encodeConfig on its image. Throws DecodeError otherwise.
tm::Configuration decodePoint(const EncodingScheme& scheme, const RatPoint& p);

}  // namespace preach::embed
