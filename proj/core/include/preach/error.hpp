#pragma once

#include <stdexcept>
#include <string>

namespace preach {

/// Base of every recoverable error raised by the toolkit. Bad input, partial
/// maps, malformed files: anything a caller may report and continue from.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A point outside the domain of a system or grid.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a partial map at a point where it is undefined.
class UndefinedError : public Error {
public:
    using Error::Error;
};

/// The image of a point leaves the system domain (the system is not closed).
class EscapeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A rational point that is not the encoding of any configuration.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant. Never expected on valid input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace preach
