#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different cyclotomic fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Operands have different variable counts or an index is out of range.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error {
public:
    DegreeCapExceeded(unsigned degree, unsigned cap)
        : Error("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap)), degree_(degree), cap_(cap)
    {
    }
    unsigned degree() const noexcept { return degree_; }
    unsigned cap() const noexcept { return cap_; }

private:
    unsigned degree_;
    unsigned cap_;
};

/// A precondition of an operation does not hold (wrong map kind, singular matrix, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The leading-term hypothesis of the triangular elimination fails.
class LtConditionViolated : public Error {
public:
    using Error::Error;
};

/// Syntax error in the expression or scalar grammar; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at index " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace mzlab
