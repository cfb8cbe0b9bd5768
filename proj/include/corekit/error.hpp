#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace corekit {

/// Base class for every error raised by corekit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument (t, k, m, a modulus) is outside its domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed exponential-notation text. `position()` is the 0-based offset
/// of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class CellOutOfDiagram : public Error {
public:
    using Error::Error;
};

class NotATCore : public Error {
public:
    using Error::Error;
};

/// A quotient list whose length does not match t.
class ArityError : public Error {
public:
    using Error::Error;
};

/// The requested family of simultaneous cores is infinite (gcd of moduli > 1).
class InfiniteFamily : public Error {
public:
    InfiniteFamily(const std::string& what, std::int64_t gcd) : Error(what), gcd_(gcd) {}
    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t gcd_;
};

/// Enumeration bound exceeds the configured ceiling.
class ResourceBound : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a construction fails its own consistency check. Indicates a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace corekit
