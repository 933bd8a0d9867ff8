#include "zetablock/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "zetablock/errors.hpp"

namespace zetablock {

BernoulliCache::BernoulliCache() { values_.emplace_back(1); }

const RationalQ& BernoulliCache::get(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
  for (int k = static_cast<int>(values_.size()); k <= n; ++k) {
    // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j
    RationalQ sum(0);
    mpz_class binom;
    for (int j = 0; j < k; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k + 1),
                   static_cast<unsigned long>(j));
      sum += RationalQ(binom) * values_[static_cast<size_t>(j)];
    }
    RationalQ bk = -sum / RationalQ(k + 1);
    bk.canonicalize();
    values_.push_back(std::move(bk));
  }
  return values_[static_cast<size_t>(n)];
}

namespace {

/// b^{s+j} - b with the near-pole guard, advanced incrementally in j.
class GuardedDenominators {
 public:
  GuardedDenominators(const Complex& s, int b, const PrecisionContext& ctx)
      : b_(b),
        bpow_(int_pow_complex(static_cast<unsigned long>(b), s, ctx)),
        threshold_(pow2(-static_cast<long>(ctx.mantissa_bits / 4), ctx.mantissa_bits)),
        j_(0) {}

  /// Denominator at the current shift j (starts at 0); advance() moves to j+1.
  Complex current() const {
    Complex d = bpow_ - Real(static_cast<long>(b_), bpow_.precision());
    if (abs(d) < threshold_)
      throw NearPole("b^{s+j} - b nearly vanishes at shift j = " + std::to_string(j_));
    return d;
  }
  const Complex& power() const { return bpow_; }
  void advance() {
    bpow_ = bpow_ * Real(static_cast<long>(b_), bpow_.precision());
    ++j_;
  }

 private:
  int b_;
  Complex bpow_;
  Real threshold_;
  int j_;
};

}  // namespace

Complex u_m_closed(const Complex& s, int m, int b, const PrecisionContext& ctx,
                   BernoulliCache& bernoulli) {
  if (m < 0) throw std::invalid_argument("u_m_closed: m must be >= 0");
  if (b < 2) throw std::invalid_argument("u_m_closed: base must be >= 2");
  const mpfr_prec_t p = ctx.mantissa_bits;
  const Complex sp = rounded_to(s, p);

  GuardedDenominators den(sp, b, ctx);
  // u_0 = b^s / (b^s - b)
  const Complex u0 = den.power() / den.current();
  if (m == 0) return u0;

  KahanComplex acc(p);
  acc.add(u0 / Real(static_cast<long>(m + 1), p));
  den.advance();
  acc.add(-(den.power() / den.current()) / Real(2L, p));

  // sum over k: m!/(m-2k+1)! * B_2k/(2k)! * b^{s+2k} / (b^{s+2k} - b)
  mpz_class falling = 1;  // m (m-1) ... (m-2k+2), two more factors per k
  mpz_class fact2k = 1;   // (2k)!
  int shift = 1;
  for (int k = 1; 2 * k <= m; ++k) {
    while (shift < 2 * k) {
      den.advance();
      ++shift;
    }
    if (k == 1)
      falling = m;
    else
      falling *= mpz_class(m - 2 * k + 3) * mpz_class(m - 2 * k + 2);
    fact2k *= mpz_class(2 * k - 1) * mpz_class(2 * k);
    RationalQ coefficient = RationalQ(falling) * bernoulli.get(2 * k) / RationalQ(fact2k);
    coefficient.canonicalize();
    acc.add((den.power() / den.current()) * Real(coefficient, p));
  }
  return acc.result();
}

Complex cstar_via_bernoulli(const Complex& s, int m, int b, const PrecisionContext& ctx,
                            BernoulliCache& bernoulli) {
  const mpfr_prec_t p = ctx.mantissa_bits;
  const Complex sp = rounded_to(s, p);
  const Complex u = u_m_closed(sp, m, b, ctx, bernoulli);
  const Complex one = Complex::one(p);
  const Complex factor = one - int_pow_complex(static_cast<unsigned long>(b), one - sp, ctx);
  return pochhammer_over_factorial(sp, m, ctx) * factor * u;
}

Real w_closed(const Real& sigma, int b, int m, const PrecisionContext& ctx) {
  if (!(sigma > 0L)) throw std::invalid_argument("w_closed: sigma must be > 0");
  if (b < 2 || m < 0) throw std::invalid_argument("w_closed: bad arguments");
  const mpfr_prec_t p = ctx.mantissa_bits;
  const Real cutoff = pow2(-static_cast<long>(p) - 8, p);
  const Real binv = 1L / Real(static_cast<long>(b), p);
  const Real bsinv = real_pow(Real(static_cast<long>(b), p), -sigma, ctx);

  KahanReal acc(p);
  if (m == 0) acc.add(Real(1L, p));  // k = 0 term: (1 - b^0)^0 = 1
  Real bk = Real(1L, p);   // b^-k
  Real bsk = Real(1L, p);  // b^{-sigma k}
  for (;;) {
    bk *= binv;
    bsk *= bsinv;
    // Remaining tail is below bsk/(1 - b^-sigma); the leading factor
    // (1 - b^-sigma) cancels that amplification exactly.
    if (bsk < cutoff) break;
    acc.add(bsk * pow_ui(1L - bk, static_cast<unsigned long>(m)));
  }
  return (1L - bsinv) * acc.result();
}

namespace {

/// One pass of the Chebyshev-weighted acceleration at order n.
Complex accelerated_eta(const Complex& s, long n, mpfr_prec_t p) {
  PrecisionContext ctx{p, 1, 0};
  const Real sqrt8 = sqrt(Real(8L, p));
  Real d = pow_ui(sqrt8 + 3L, static_cast<unsigned long>(n));
  d = (d + 1L / d) / 2L;

  Real b(-1L, p);
  Real c = -d;
  KahanComplex acc(p);
  const Complex minus_s = -s;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    acc.add(int_pow_complex(static_cast<unsigned long>(k + 1), minus_s, ctx) * c);
    b *= 2L * (k + n) * (k - n);
    b /= (2L * k + 1L) * (k + 1L);
  }
  return acc.result() / d;
}

}  // namespace

Complex eta_reference(const Complex& s, int digits) {
  if (!(s.re > 0L)) throw std::invalid_argument("eta_reference: Re s must be > 0");
  if (digits < 1) throw std::invalid_argument("eta_reference: digits must be >= 1");
  const int work_digits = digits + 10;
  const mpfr_prec_t p = bits_for_digits(work_digits) + 32;
  const Complex sp = rounded_to(s, p);

  // Error decays like (3+sqrt 8)^-n and grows like e^{pi |t| / 2} through
  // the measure's total variation, so start n past both and validate by
  // agreement between two orders.
  const double t = std::fabs(s.im.to_double());
  const double rate = 1.7627471740390861;  // log(3 + sqrt 8)
  long n = static_cast<long>(std::ceil((work_digits * 2.302585092994046 +
                                        1.5707963267948966 * t) / rate)) + 12;
  const Real agree_tol = pow10(-(digits + 2), p) / 2L;
  Complex last(p);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Complex r1 = accelerated_eta(sp, n, p);
    const Complex r2 = accelerated_eta(sp, n + n / 8 + 8, p);
    last = r2;
    if (abs(r1 - r2) <= agree_tol) return r2;
    n += n / 2;
  }
  throw Error("eta_reference failed to stabilize; imaginary part too large?");
}

Complex zeta_reference(const Complex& s, int digits) {
  const mpfr_prec_t p = bits_for_digits(digits + 10) + 32;
  const Complex sp = rounded_to(s, p);
  const Complex one = Complex::one(p);
  PrecisionContext ctx{p, 1, 0};
  const Complex factor = one - int_pow_complex(2, one - sp, ctx);
  if (abs(factor) < pow10(-10, p))
    throw NearPole("zeta_reference: 1 - 2^{1-s} too close to zero");
  return eta_reference(sp, digits) / factor;
}

Complex eta_b_reference(const Complex& s, int b, int digits) {
  const mpfr_prec_t p = bits_for_digits(digits + 10) + 32;
  const Complex sp = rounded_to(s, p);
  const Complex one = Complex::one(p);
  PrecisionContext ctx{p, 1, 0};
  const Complex factor = one - int_pow_complex(static_cast<unsigned long>(b), one - sp, ctx);
  return factor * zeta_reference(sp, digits);
}

}  // namespace zetablock
