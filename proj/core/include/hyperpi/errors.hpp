#pragma once

#include <stdexcept>
#include <string>

namespace hyperpi {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: empty interval, parameter outside its allowed range, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// Level refinement stalled above the requested tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// An integrand factor (1 - x*u) meets the closed negative real axis on
/// u in (0,1); the argument lies on the excluded set of the Euler-integral
/// continuation.
class BranchCutError : public Error {
public:
    using Error::Error;
};

/// Series summation hit the shell cap; arguments are too close to the
/// polydisc boundary for the series route.
class SlowConvergence : public Error {
public:
    using Error::Error;
};

/// A closed form's implied elliptic modulus landed outside [0,1).
class ModulusOutOfRange : public Error {
public:
    using Error::Error;
};

/// No closed form exists for this (power, interval, configuration) triple.
class UnsupportedCombination : public Error {
public:
    using Error::Error;
};

/// The requested integral diverges (power 4 on an unbounded interval).
class DivergentIntegral : public Error {
public:
    using Error::Error;
};

/// Identity key not present in the catalog.
class UnknownIdentity : public Error {
public:
    using Error::Error;
};

/// Bad command line.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace hyperpi
