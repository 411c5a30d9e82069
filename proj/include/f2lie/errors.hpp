#pragma once

#include <stdexcept>
#include <string>

namespace f2lie {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series
struct OverflowError : Error {
  using Error::Error;
};
struct NonUnitConstantTerm : Error {
  using Error::Error;
};

// fplin
struct NonPrimeModulus : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// gradedlie
struct UnknownGenerator : Error {
  using Error::Error;
};
struct CapTooLarge : Error {
  using Error::Error;
};
struct NegativeDimension : Error {
  using Error::Error;
};
struct InvalidParameters : Error {
  using Error::Error;
};

// dgmod
struct ModulusMismatch : Error {
  using Error::Error;
};
struct InvalidDifferential : Error {
  using Error::Error;
};
struct DegreeTooSmall : Error {
  using Error::Error;
};

} // namespace f2lie
