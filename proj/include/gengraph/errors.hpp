#pragma once

#include <stdexcept>
#include <string>

namespace gengraph {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured cap or step budget would be exceeded.  Kept distinct from
/// verification failures so callers can map budget aborts to their own exit
/// code.  `feasible_depth` is the largest arity that still fits the budget
/// (-1 when not applicable).
struct BudgetError : Error {
    explicit BudgetError(const std::string& what, int feasible_depth = -1)
        : Error(what), feasible_depth(feasible_depth) {}
    int feasible_depth;
};

/// Malformed textual input (group table files, group expressions).
/// Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// A structural invariant or precondition does not hold.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace gengraph
