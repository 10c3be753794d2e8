#pragma once

#include <stdexcept>
#include <string>

namespace manhattan {

// An instance exceeds a configured size bound (oracle or render scale).
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The solver handed the tiler a pair whose strip violates the leveling
// preconditions. Signals a solver/tiler disagreement; never recovered from.
struct TilerInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed skyline text.
struct ParseError : std::runtime_error {
    size_t line;
    size_t column;

    ParseError(size_t line_, size_t column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace manhattan
