#pragma once

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace zetablock {

/// Binary mantissa bits needed to represent `digits` decimal digits.
inline mpfr_prec_t bits_for_digits(int digits) {
  // log2(10) rounded up a touch so the ceil never under-counts.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873627));
}

/// Working precision shared by a whole computation: every float created
/// under a context carries `mantissa_bits` and rounds to nearest.
struct PrecisionContext {
  mpfr_prec_t mantissa_bits = 0;
  int target_digits = 0;
  int guard_bits = 0;

  /// Default policy: enough bits for `digits` decimals plus 32 guard bits.
  static PrecisionContext for_digits(int digits, int guard = 32) {
    if (digits < 1) throw std::invalid_argument("target_digits must be >= 1");
    if (guard < 0) throw std::invalid_argument("guard_bits must be >= 0");
    PrecisionContext ctx;
    ctx.target_digits = digits;
    ctx.guard_bits = guard;
    ctx.mantissa_bits = bits_for_digits(digits) + guard;
    return ctx;
  }

  /// Same target, twice the working bits. Used by the verification paths
  /// that recompute results at doubled precision.
  PrecisionContext doubled() const {
    PrecisionContext ctx = *this;
    ctx.mantissa_bits = 2 * mantissa_bits;
    return ctx;
  }

  bool valid() const {
    return mantissa_bits >= bits_for_digits(target_digits) + guard_bits &&
           target_digits >= 1 && guard_bits >= 0;
  }
};

}  // namespace zetablock
