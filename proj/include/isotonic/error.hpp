#pragma once

#include <stdexcept>
#include <string>

namespace isotonic {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x <= 0, non-finite input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Barrier strength below -1/4 (in units of hbar^2/M): the spectrum is unbounded below.
class UnphysicalRegime : public Error {
public:
    using Error::Error;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Bracket scan of a transcendental energy equation found no sign change.
class NoRootInRange : public Error {
public:
    using Error::Error;
};

/// Energy makes the spinor coupling denominator vanish.
class DegenerateEnergy : public Error {
public:
    using Error::Error;
};

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class ToleranceNotMet : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

}  // namespace isotonic
