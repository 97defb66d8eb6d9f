#pragma once

#include <stdexcept>
#include <string>

namespace dycknet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed (JSON, word tokens, numeric literals).
struct ParseError : Error {
    using Error::Error;
};

// Argument outside a function's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct UnknownSymbolError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& det)
        : Error("singular matrix (determinant " + det + ")"), determinant(det) {}
    std::string determinant;
};

// An infinite gate weight met an exactly-zero hidden component; the gate
// semantics are defined only for sign-definite inputs.
struct GateDegenerateError : Error {
    using Error::Error;
};

struct KTooSmallError : Error {
    using Error::Error;
};

struct BoundViolatedError : Error {
    explicit BoundViolatedError(const std::string& msg, int step = -1)
        : Error(msg), step(step) {}
    int step;
};

struct StateBudgetExceededError : Error {
    using Error::Error;
};

struct AmbiguousDecodeError : Error {
    using Error::Error;
};

struct AlphabetMismatchError : Error {
    using Error::Error;
};

} // namespace dycknet
