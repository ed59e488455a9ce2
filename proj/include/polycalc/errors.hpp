#pragma once

#include <stdexcept>
#include <string>

namespace polycalc {

class PolycalcError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class EmptyInput : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class DomainError : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

/// The origin is not in the relative interior, so the polar is unbounded.
class CenteringError : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class TrivialFaceError : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class InvalidConstruction : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class PreconditionError : public PolycalcError {
public:
    using PolycalcError::PolycalcError;
};

class ParseError : public PolycalcError {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : PolycalcError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

}  // namespace polycalc
