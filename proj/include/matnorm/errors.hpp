#pragma once

#include <stdexcept>
#include <string>

namespace matnorm {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TooManyMatrices : Error { using Error::Error; };
struct KTooLarge : Error { using Error::Error; };
struct MCConfigRequired : Error { using Error::Error; };
struct ConfigTooSmall : Error { using Error::Error; };
struct InvalidKind : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NegativeEntry : Error { using Error::Error; };

} // namespace matnorm
