#pragma once

#include <stdexcept>
#include <string>

namespace gic {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A channel description violates its invariants (non-positive direct gain,
/// negative entries, shape mismatch, malformed file, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside an operation's domain (power cap exceeded,
/// parameter out of range, too few samples, wrong user count, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The SINR point sits at or beyond the invertibility asymptote of the
/// SNR<->SINR map; the required powers are unbounded.
class SingularTransform : public Error {
public:
    using Error::Error;
};

/// The linear solve produced a negative power: the SINR point is outside
/// the achievable cone.
class InfeasibleSinr : public Error {
public:
    using Error::Error;
};

} // namespace gic
