#pragma once

#include <string>

#include "zetablock/complex.hpp"
#include "zetablock/precision.hpp"

namespace zetablock {

/// Parses "RE", "RE+IMi" or "RE-IMi" where both parts are plain decimal
/// literals (optional exponent). No expression evaluation. Throws ParseError.
Complex parse_complex(const std::string& text, const PrecisionContext& ctx);

/// Fixed-point decimal string with `digits` fractional digits, rounded to
/// nearest. Matches the fixed-point accuracy contract of the evaluator.
std::string format_fixed(const Real& x, int digits);

/// Scientific notation with `digits` significant fractional digits.
std::string format_scientific(const Real& x, int digits);

}  // namespace zetablock
