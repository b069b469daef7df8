#pragma once

#include <stdexcept>
#include <string>

namespace ringinv {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (scalar syntax, ring/element files). Carries the
/// byte offset at which scanning failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Mixed scalar kinds or mismatched moduli in one operation.
class IncompatibleScalarsError : public Error {
public:
    using Error::Error;
};

/// Invalid ring descriptor (illegal kind/involution combination, bad modulus, ...).
class DescriptorError : public Error {
public:
    using Error::Error;
};

/// Two elements of different rings fed to a binary operation.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration requested on an infinite ring.
class NotEnumerableError : public Error {
public:
    using Error::Error;
};

/// Operation not available for this ring or scalar kind.
class UnsupportedRingError : public Error {
public:
    using Error::Error;
};

/// A checked operation precondition does not hold (invalid pair, invalid
/// idempotent, not-applicable decomposition, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Internal consistency violation: signals an implementation bug, never a
/// mathematical outcome.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ringinv
