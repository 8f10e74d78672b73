#pragma once

#include <stdexcept>
#include <string>

namespace ids {

// Bad user-supplied data (out-of-range indices, malformed files, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure in a text input; carries the 1-based line number.
struct ParseError : InputError {
    int line;
    ParseError(int line_, const std::string& msg)
        : InputError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// An exponential-cost routine refused to run past its size guard.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ids
