#pragma once

#include "zetablock/complex.hpp"
#include "zetablock/precision.hpp"

namespace zetablock {

/// n^e for an integer n >= 1, computed as exp(e log n) at ctx precision.
/// Exact for n = 1. This is the kernel behind every n^{-(s+m)} and b^{s+m}.
Complex int_pow_complex(unsigned long n, const Complex& e, const PrecisionContext& ctx);

/// a^x for a > 0 at ctx precision.
Real real_pow(const Real& a, const Real& x, const PrecisionContext& ctx);

/// Kahan compensated accumulator at a fixed precision.
class KahanReal {
 public:
  explicit KahanReal(mpfr_prec_t prec) : sum_(0L, prec), c_(0L, prec), y_(prec), t_(prec) {}

  void add(const Real& x) {
    mpfr_sub(y_.raw(), x.raw(), c_.raw(), MPFR_RNDN);
    mpfr_add(t_.raw(), sum_.raw(), y_.raw(), MPFR_RNDN);
    mpfr_sub(c_.raw(), t_.raw(), sum_.raw(), MPFR_RNDN);
    mpfr_sub(c_.raw(), c_.raw(), y_.raw(), MPFR_RNDN);
    mpfr_set(sum_.raw(), t_.raw(), MPFR_RNDN);
  }
  const Real& result() const { return sum_; }

 private:
  Real sum_, c_, y_, t_;
};

class KahanComplex {
 public:
  explicit KahanComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}

  void add(const Complex& z) {
    re_.add(z.re);
    im_.add(z.im);
  }
  Complex result() const { return {re_.result(), im_.result()}; }

 private:
  KahanReal re_, im_;
};

}  // namespace zetablock
