#pragma once

#include <stdexcept>
#include <string>

namespace tdcad {

// Precondition or domain violation (bad input to a public operation).
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Cooperative cancellation, raised when a work deadline expires.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("computation timed out") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace tdcad
