#pragma once

#include <stdexcept>
#include <string>

namespace fiberforge {

// Bad or ill-formed input: unknown preset, malformed JSON, a complex that is
// not a surface where one is required, and so on.  CLI maps this to exit 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematically impossible request: Euler number out of range for the
// base, Hopf obstruction while extending over a 3-simplex.  CLI exit 3.
class ObstructionError : public std::runtime_error {
public:
    explicit ObstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant; indicates a bug, not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace fiberforge
