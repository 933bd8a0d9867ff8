#include "zetablock/coefficients.hpp"

#include <stdexcept>

namespace zetablock {

GammaTable gamma_table(int b, int m_max, const PrecisionContext& ctx) {
  if (b < 2) throw std::invalid_argument("gamma_table: base must be >= 2");
  GammaTable table;
  table.b = b;
  table.prec = ctx.mantissa_bits;
  gamma_table_extend(table, m_max);
  return table;
}

void gamma_table_extend(GammaTable& table, int m_max) {
  const mpfr_prec_t p = table.prec;
  for (int j = table.max_index() + 1; j <= m_max; ++j) {
    KahanReal acc(p);
    for (int a = 1; a < table.b; ++a)
      acc.add(ui_pow_ui(static_cast<unsigned long>(a), static_cast<unsigned long>(j), p));
    table.values.push_back(acc.result());
  }
}

CoefficientTable::CoefficientTable(int b, Complex s, PrecisionContext ctx)
    : b_(b), s_(std::move(s)), ctx_(ctx), gammas_(gamma_table(b, 0, ctx)) {
  if (!(s_.re > 0L))
    throw std::invalid_argument("CoefficientTable: Re s must be > 0");
  const mpfr_prec_t p = ctx_.mantissa_bits;
  s_ = rounded_to(s_, p);
  cstar_.push_back(Complex::one(p));
  cstar_bpow_ = int_pow_complex(static_cast<unsigned long>(b_), s_, ctx_);
  c_bpow_ = cstar_bpow_;
}

void cstar_extend(CoefficientTable& table, int upto) {
  const mpfr_prec_t p = table.ctx_.mantissa_bits;
  gamma_table_extend(table.gammas_, upto);
  const Real b_real(static_cast<long>(table.b_), p);
  for (int m = static_cast<int>(table.cstar_.size()); m <= upto; ++m) {
    table.cstar_bpow_ = table.cstar_bpow_ * b_real;  // b^{s+m}
    // Denominator b^{s+m} - b cannot vanish: Re(s+m) > 1 for m >= 1.
    const Complex denom = table.cstar_bpow_ - b_real;
    KahanComplex acc(p);
    Complex weight = Complex::one(p);  // (s+m)...(s+m-j+1) / j!
    for (int j = 1; j <= m; ++j) {
      weight = weight * (table.s_ + static_cast<long>(m - j + 1));
      weight = weight / Real(static_cast<long>(j), p);
      acc.add(weight * table.gammas_.gamma(j) * table.cstar_[static_cast<size_t>(m - j)]);
    }
    table.cstar_.push_back(acc.result() / denom);
  }
}

void c_extend(CoefficientTable& table, int upto) {
  const mpfr_prec_t p = table.ctx_.mantissa_bits;
  gamma_table_extend(table.gammas_, upto);
  const Real b_real(static_cast<long>(table.b_), p);
  if (table.c_.empty()) table.c_.push_back(Complex::one(p));
  for (int m = static_cast<int>(table.c_.size()); m <= upto; ++m) {
    table.c_bpow_ = table.c_bpow_ * b_real;  // b^{s+m}
    const Complex denom = table.c_bpow_ - b_real;
    KahanComplex acc(p);
    mpz_class binom = 1;  // C(m, j), exact
    for (int j = 1; j <= m; ++j) {
      binom *= m - j + 1;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
      acc.add(table.c_[static_cast<size_t>(m - j)] * (table.gammas_.gamma(j) * Real(binom, p)));
    }
    table.c_.push_back(acc.result() / denom);
  }
}

PochhammerRatio pochhammer_ratio(const Complex& s, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.mantissa_bits;
  PochhammerRatio r;
  r.s = rounded_to(s, p);
  r.sigma = r.s.re;
  r.m = 0;
  r.value = Real(1L, p);
  return r;
}

void pochhammer_ratio_extend(PochhammerRatio& ratio, int upto) {
  // Each factor |s+j| / (sigma+j) is >= 1, so the value never decreases.
  for (int j = ratio.m + 1; j <= upto; ++j) {
    ratio.value *= hypot(ratio.s.re + j, ratio.s.im);
    ratio.value /= ratio.sigma + j;
  }
  if (upto > ratio.m) ratio.m = upto;
}

Complex pochhammer_over_factorial(const Complex& s, int m, const PrecisionContext& ctx) {
  const mpfr_prec_t p = ctx.mantissa_bits;
  Complex r = Complex::one(p);
  for (int j = 1; j <= m; ++j) {
    r = r * (s + static_cast<long>(j));
    r = r / Real(static_cast<long>(j), p);
  }
  return r;
}

}  // namespace zetablock
