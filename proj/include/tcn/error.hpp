#pragma once

#include <stdexcept>
#include <string>

namespace tcn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different coefficient fields, or a field operation is
// undefined (inverse of zero, non-prime modulus).
class FieldError : public Error {
public:
    using Error::Error;
};

// Malformed or out-of-range user input. The CLI maps this to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// A problem is too large for the configured dimension cap.
class SizeLimitError : public InputError {
public:
    using InputError::InputError;
};

// Supplied space metadata contradicts a computed bound (lower > upper).
// The CLI maps this to exit code 3.
class MetadataError : public Error {
public:
    using Error::Error;
};

// Elements from different algebras were combined.
class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace tcn
