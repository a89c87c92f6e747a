#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrangelab {

/// A configured resource bound (flat count, hyperplane count, Bell bound) was hit.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace arrangelab
