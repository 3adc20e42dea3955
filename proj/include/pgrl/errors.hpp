#pragma once

#include <stdexcept>
#include <string>

namespace pgrl {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ModulusNotPrime : Error {
    explicit ModulusNotPrime(const std::string& what) : Error(what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

struct NotASubspace : Error {
    explicit NotASubspace(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct NonAbelian : Error {
    explicit NonAbelian(const std::string& what) : Error(what) {}
};

struct NonCommutativeInput : Error {
    explicit NonCommutativeInput(const std::string& what) : Error(what) {}
};

struct NotClosedInput : Error {
    explicit NotClosedInput(const std::string& what) : Error(what) {}
};

// A postcondition the implementation itself guarantees failed to hold.
// Seeing this exception is always a bug, never a usage error.
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace pgrl
