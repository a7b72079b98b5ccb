#pragma once

#include <stdexcept>
#include <string>

namespace ceqss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPrime : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct DuplicatePoints : Error { using Error::Error; };
struct FieldTooSmall : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadSubsetSize : Error { using Error::Error; };
struct SameQudit : Error { using Error::Error; };
struct DuplicateIndex : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };

// Thrown when a machine check (recovery report, fidelity bound, ...) fails.
struct VerificationFailed : Error { using Error::Error; };

} // namespace ceqss
