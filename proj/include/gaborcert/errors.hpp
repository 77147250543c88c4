#pragma once

#include <stdexcept>
#include <string>

namespace gaborcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed entry literal or lattice spec file.
struct ParseError : Error { using Error::Error; };
// Generator matrix not square / sizes inconsistent with n.
struct DimensionMismatch : Error { using Error::Error; };
// Generator matrix singular to working precision.
struct SingularGenerators : Error { using Error::Error; };
// Invalid argument range (k <= 0, negative radius, bad jet order, ...).
struct BadRange : Error { using Error::Error; };
// Invalid index data (subset out of range, duplicate columns, ...).
struct BadIndex : Error { using Error::Error; };
// Point enumeration would exceed the configured cap.
struct RadiusTooLarge : Error { using Error::Error; };
// Pivot collapse or other loss of significance in an exactness-critical path.
struct PrecisionLoss : Error { using Error::Error; };
// Gaussian window parameter is not symmetric with positive-definite
// imaginary part.
struct NotInSiegelHalfSpace : Error { using Error::Error; };
// A coefficient or derivative order exceeds the configured degree cap.
struct DegreeOverflow : Error { using Error::Error; };
// A finite section (jet rows x monomial columns) would exceed its size cap.
struct TruncationCapExceeded : Error { using Error::Error; };
// reproduce: scenario name not registered.
struct UnknownScenario : Error { using Error::Error; };

}  // namespace gaborcert
