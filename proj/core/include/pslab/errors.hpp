#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

/// Bad input: malformed files, unknown generators, inhomogeneous relations, ...
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with a position inside the offending document.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line, int column)
        : InputError(what + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// A configurable ceiling (basis size, pair count, enumeration size) was hit.
/// Partial state is discarded by the thrower.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, maps to exit code 4.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace pslab
