#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crdom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad call: vertex out of range, self-loop, malformed builder request.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 input. `offset()` is the byte position of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_{offset} {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Request exceeds a solver or enumeration cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// No witness construction exists for the requested parameters.
class ConstructionUnavailable : public Error {
public:
    using Error::Error;
};

} // namespace crdom
