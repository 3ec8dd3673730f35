#pragma once

#include <stdexcept>
#include <string>

namespace holoprove {

enum class ErrorKind {
    Usage,             // violated precondition (tag mismatch, zero divisor, ...)
    Parse,             // malformed text input
    Format,            // well-formed lines, invalid document structure
    NonUnit,           // series inverse of a non-unit
    Branch,            // wrong branch / constant term
    NotARoot,          // P(0, g0) != 0
    RamifiedBranch,    // dP/dw(0, g0) == 0
    SingularRecurrence,
    Integrality,
    DegenerateOde,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse error that remembers the 1-based input line (0 when not line-oriented).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse,
                line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace holoprove
