#pragma once

#include <stdexcept>
#include <string>

namespace maxplus {

/// Raised when an operation's preconditions are violated (dimension
/// mismatches, non-finite vectors, acyclic inputs where a cycle is needed).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Raised by the matrix-file reader; carries a 1-based position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}

    int line;
    int column;
};

} // namespace maxplus
