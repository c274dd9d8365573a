#ifndef MUTAU_ERRORS_HPP
#define MUTAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mutau {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: malformed expressions, unknown variables, inconsistent
// flags, unreadable files. CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Well-formed input whose mathematical answer is an error condition.
// CLI exit code 1.
struct MathError : Error {
    using Error::Error;
};

struct SyntaxError : InputError {
    std::size_t position;  // 1-based character offset
    SyntaxError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariableError : InputError {
    using InputError::InputError;
};

struct DivisionNotAllowedError : InputError {
    using InputError::InputError;
};

struct RingMismatchError : InputError {
    using InputError::InputError;
};

struct FieldMismatchError : InputError {
    using InputError::InputError;
};

struct DivisionByZeroError : MathError {
    using MathError::MathError;
};

struct NotPrimeError : InputError {
    using InputError::InputError;
};

// The chosen prime cannot be used for this input (it divides a denominator).
struct BadPrimeError : MathError {
    using MathError::MathError;
};

struct ZeroIdealError : MathError {
    using MathError::MathError;
};

struct ImproperIdealError : MathError {
    using MathError::MathError;
};

struct NotCompleteIntersectionError : MathError {
    using MathError::MathError;
};

struct NotFinitelyDeterminedError : MathError {
    using MathError::MathError;
};

// Step budget exceeded. Deliberately distinct from an infinite answer:
// infinity is only ever reported on exact evidence.
struct ResourceExhaustedError : MathError {
    using MathError::MathError;
};

}  // namespace mutau

#endif
