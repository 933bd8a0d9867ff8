#pragma once

#include <stdexcept>
#include <string>

namespace zetablock {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation planning found no index with geometric ratio < 1.
/// Usually means the block exponent ell is too small for this s.
struct PlanFailure : Error {
  using Error::Error;
};

/// The term cap was reached before the tail bound dropped below tolerance.
struct MaxTermsExceeded : Error {
  using Error::Error;
};

/// zeta(1) requested; the function has its pole there.
struct PoleAtOne : Error {
  using Error::Error;
};

/// No candidate base separates the conversion factor 1 - b^(1-s) from zero.
struct BaseExhausted : Error {
  using Error::Error;
};

/// A closed-form denominator b^(s+j) - b is too close to zero.
struct NearPole : Error {
  using Error::Error;
};

/// Malformed CLI input (complex literal, flag value).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace zetablock
