#include "zetablock/numerics.hpp"

#include <stdexcept>

namespace zetablock {

Complex int_pow_complex(unsigned long n, const Complex& e, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("int_pow_complex: n must be >= 1");
  const mpfr_prec_t p = ctx.mantissa_bits;
  if (n == 1) return Complex::one(p);

  Real ln = log_ui(n, p);

  // n^e = exp(re(e) ln n) * (cos(im(e) ln n) + i sin(im(e) ln n))
  Real mag(p);
  mpfr_mul(mag.raw(), e.re.raw(), ln.raw(), MPFR_RNDN);
  mpfr_exp(mag.raw(), mag.raw(), MPFR_RNDN);

  if (e.im.is_zero()) return Complex::from_real(std::move(mag));

  Real arg(p);
  mpfr_mul(arg.raw(), e.im.raw(), ln.raw(), MPFR_RNDN);
  Real c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), arg.raw(), MPFR_RNDN);
  return {mag * c, mag * s};
}

Real real_pow(const Real& a, const Real& x, const PrecisionContext& ctx) {
  if (!(a > 0L)) throw std::invalid_argument("real_pow: base must be > 0");
  Real r(ctx.mantissa_bits);
  mpfr_pow(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace zetablock
