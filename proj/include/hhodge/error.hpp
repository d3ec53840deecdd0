#pragma once

#include <stdexcept>
#include <string>

namespace hhodge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (group files, insertion specs, class expressions).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Well-formed input that violates a mathematical invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not, or a quantity that must be
/// rational was not.  Always a bug or corrupted data, never user error.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hhodge
