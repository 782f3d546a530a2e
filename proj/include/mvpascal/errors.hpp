#pragma once

#include <stdexcept>
#include <string>

namespace mvpascal {

// Base class for everything this library throws on bad input or broken
// preconditions. Internal invariant violations use assertions instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different ambient dimensions (multi-index lengths differ,
// polynomial variable counts differ, and so on).
struct DimensionError : Error {
    using Error::Error;
};

// Matrix or vector shapes do not conform, or an operand is empty where a
// nonempty one is required.
struct ShapeError : Error {
    using Error::Error;
};

// Malformed textual input. `position` is a 0-based offset into the input
// where the problem was detected, or npos when no offset applies.
struct ParseError : Error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position;
    explicit ParseError(const std::string& msg, std::size_t pos = npos)
        : Error(msg), position(pos) {}
};

// The set of standard monomials is infinite (the ideal is not
// zero-dimensional) and no degree bound was supplied.
struct InfiniteSetError : Error {
    using Error::Error;
};

// An operation that needs a downward-closed index set was given one that
// is not closed under componentwise predecessors.
struct MonomialConditionError : Error {
    using Error::Error;
};

// A sequence is missing a value for some point of the requested window.
struct MissingValueError : Error {
    using Error::Error;
};

// Reciprocal or division demanded of a series whose constant term is zero.
struct NonUnitError : Error {
    using Error::Error;
};

// A substituted series has a nonzero constant term.
struct NonzeroConstantTermError : Error {
    using Error::Error;
};

// The linear-coefficient matrix of a substitution family is singular.
struct SingularJacobianError : Error {
    using Error::Error;
};

// Matrix powers fail to vanish within the dimension bound.
struct NonNilpotentError : Error {
    using Error::Error;
};

// An exact division that must come out integral did not.
struct NonIntegralEntryError : Error {
    using Error::Error;
};

// A requested window reaches beyond the truncation cap of a series.
struct WindowExceedsCapError : Error {
    using Error::Error;
};

}  // namespace mvpascal
