#ifndef SSV_ERRORS_HPP
#define SSV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssv {

// Common base so callers can catch anything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// gamma_factor evaluated at its pole.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// A generator index outside the canonical index set of the algebra.
struct IndexError : Error {
    explicit IndexError(const std::string& what) : Error(what) {}
};

// A family/rank combination an operation does not support.
struct FamilyError : Error {
    explicit FamilyError(const std::string& what) : Error(what) {}
};

// A degree / order parameter outside the range where a formula is valid.
struct RangeError : Error {
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Negative-depth generator where only nonpositive (or only nonnegative)
// loop degrees are allowed.
struct DepthError : Error {
    explicit DepthError(const std::string& what) : Error(what) {}
};

// Harish-Chandra projection applied to a non-invariant (nonzero weight)
// element; the projection is only a homomorphism on invariants.
struct NotInvariantError : Error {
    explicit NotInvariantError(const std::string& what) : Error(what) {}
};

// A randomized check drew an assignment that collides with a pole or a
// vanishing denominator and cannot proceed with that seed.
struct DegenerateAssignmentError : Error {
    explicit DegenerateAssignmentError(const std::string& what) : Error(what) {}
};

// Malformed textual input (parser front ends).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace ssv

#endif
