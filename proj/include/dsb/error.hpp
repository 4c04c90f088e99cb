#pragma once

#include <stdexcept>
#include <string>

namespace dsb {

/// Raised when an input violates a documented precondition.
/// `what()` carries the named error string reported to users.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& name) : std::invalid_argument(name) {}
};

/// A computation exceeded a documented resource ceiling.
class CeilingExceeded : public std::runtime_error {
public:
    explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal self-check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace dsb
