#pragma once

#include <stdexcept>
#include <string>

namespace rearr {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Composition whose exact value leaves the rational field (e.g. a
/// non-affine Orlicz function over a power tail). Never silent.
class UnsupportedComposition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis failed (e.g. the tail-decay condition for the
/// half-line majorant). Distinct from bad input.
class ConditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enclosure search exceeded its ceiling without bracketing a value.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed document text; carries where in the document it happened.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::string location)
        : std::runtime_error(location.empty() ? message : message + " (at " + location + ")"),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

} // namespace rearr
