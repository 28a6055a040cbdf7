#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace conic2bezier {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (non-finite value, bad range).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The ellipse has no inverse unit-circle map (collinear or coincident C, P, Q).
class DegenerateEllipse : public Error {
public:
    using Error::Error;
};

/// Malformed scene document.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed scene document that violates the schema.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace conic2bezier
