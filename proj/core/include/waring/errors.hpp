#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A (alpha, tau) pair violates the constraint box of its recursion variant.
struct InvalidParams : Error {
    using Error::Error;
};

// An intermediate quantity is not finite (degenerate denominator).
struct NonFinite : Error {
    using Error::Error;
};

// The geometric ratio `a` is degenerate (a = 1, or |a| <= 1 for the
// section-5 recursion where a^{-k+1} must stay bounded).
struct DegenerateA : Error {
    using Error::Error;
};

// The constraint box excludes every grid point.
struct NoFeasiblePoint : Error {
    using Error::Error;
};

// No (t, v) pair in range satisfies both certificate conditions.
struct NoCertificate : Error {
    using Error::Error;
};

// An argument leaves the domain of a formula (log of a non-positive
// value, vanishing denominator).
struct DomainError : Error {
    using Error::Error;
};

// A count would exceed the available integer width.
struct Overflow : Error {
    using Error::Error;
};

// A constructed set grew beyond the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// The per-step search returned a worse Delta than replaying reference
// parameters; indicates a search bug.
struct DominanceViolated : Error {
    using Error::Error;
};

// Requested k has no embedded table data.
struct UnknownK : Error {
    using Error::Error;
};

// A parameter or trace file could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace waring
