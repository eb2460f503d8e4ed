#pragma once

#include <stdexcept>

namespace qprs {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Modulus below 2.
class TooSmallError : public Error {
public:
    using Error::Error;
};

// Modulus failed the primality check.
class CompositeModulusError : public Error {
public:
    using Error::Error;
};

// q^r would not fit below 2^63, the cap that keeps every ring product
// inside one widening 128-bit multiply.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Operand shares a factor with the modulus.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// A parameter is structurally invalid (empty vector, entry out of range,
// zero low coefficient, ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// Two values that must share q and r do not.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// A table or document has the wrong number of entries.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

// Digit position t outside [0, r).
class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// An operation that needs a nonzero state window received the zero window.
class ZeroSeedError : public Error {
public:
    using Error::Error;
};

// An exhaustive operation (grid synthesis, period search, full verification)
// was asked to sweep more than kExhaustiveLimit points.
class CapExceededError : public Error {
public:
    using Error::Error;
};

} // namespace qprs
