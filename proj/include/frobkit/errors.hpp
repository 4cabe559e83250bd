#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobkit {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// 0^0 and friends.
struct IndeterminateForm : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct InvalidGenerators : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

/// An exactly evaluated closed form came out non-integral (or negative where
/// a nonnegative integer is guaranteed). Signals an upstream bug, never
/// normal operation.
struct IntegralityViolation : Error {
    using Error::Error;
};

struct BoundOverflow : Error {
    using Error::Error;
};

/// A weighted-sum formula was invoked at a lambda where one of its
/// denominators vanishes. The message names the violated condition.
struct LambdaDegenerate : Error {
    using Error::Error;
};

}  // namespace frobkit
