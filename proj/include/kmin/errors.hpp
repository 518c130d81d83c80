#pragma once

#include <stdexcept>
#include <string>

namespace kmin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// scalar arithmetic
class InexactDivision : public Error {
public:
    InexactDivision() : Error("inexact division") {}
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// linear algebra
class BothZero : public Error {
public:
    BothZero() : Error("gauss step on (0, 0)") {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NotInModule : public Error {
public:
    using Error::Error;
};

class NotUnimodular : public Error {
public:
    NotUnimodular() : Error("matrix is not unimodular") {}
};

// automata
class UnknownSymbol : public Error {
public:
    using Error::Error;
};

/// Raised when a caller violates a documented precondition that is not a
/// shape problem: mismatched alphabets or rings, inputs that are not minimal.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public PreconditionViolation {
public:
    AlphabetMismatch() : PreconditionViolation("alphabets differ") {}
};

class RingMismatch : public PreconditionViolation {
public:
    RingMismatch() : PreconditionViolation("coefficient rings differ") {}
};

class DimensionMismatch : public PreconditionViolation {
public:
    DimensionMismatch() : PreconditionViolation("dimensions differ") {}
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t limit)
        : Error("step budget of " + std::to_string(limit) + " words exceeded") {}
};

// text input
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace kmin
