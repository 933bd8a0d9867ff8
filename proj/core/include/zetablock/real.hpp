#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace zetablock {

/// Value-semantic wrapper around mpfr_t. Each value carries its own
/// precision; binary operators round to the wider operand precision,
/// compound assignment rounds into the left-hand side. Rounding is to
/// nearest everywhere.
class Real {
 public:
  Real() : Real(kHuskPrec) {}

  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_nan(v_);
  }
  Real(long n, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  Real(unsigned long n, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_ui(v_, n, MPFR_RNDN);
  }
  Real(int n, mpfr_prec_t prec) : Real(static_cast<long>(n), prec) {}
  Real(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, kHuskPrec);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent, valid for nonzero finite values.
  mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

  /// Copy rounded (to nearest) at another precision.
  Real rounded_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long n) {
    mpfr_mul_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long n) {
    mpfr_div_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }

  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kHuskPrec ? kHuskPrec : p; }

 private:
  static constexpr mpfr_prec_t kHuskPrec = 24;
  mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

inline Real operator+(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

inline Real operator+(const Real& a, long n) {
  Real r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator+(long n, const Real& a) { return a + n; }
inline Real operator-(const Real& a, long n) {
  Real r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator-(long n, const Real& a) {
  Real r(a.precision());
  mpfr_si_sub(r.raw(), n, a.raw(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, long n) {
  Real r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator*(long n, const Real& a) { return a * n; }
inline Real operator/(const Real& a, long n) {
  Real r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real operator/(long n, const Real& a) {
  Real r(a.precision());
  mpfr_si_div(r.raw(), n, a.raw(), MPFR_RNDN);
  return r;
}

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, long n) { return mpfr_cmp_si(a.raw(), n) == 0 && !a.is_nan(); }
inline bool operator<(const Real& a, long n) { return !a.is_nan() && mpfr_cmp_si(a.raw(), n) < 0; }
inline bool operator>(const Real& a, long n) { return !a.is_nan() && mpfr_cmp_si(a.raw(), n) > 0; }
inline bool operator<=(const Real& a, long n) { return !a.is_nan() && mpfr_cmp_si(a.raw(), n) <= 0; }
inline bool operator>=(const Real& a, long n) { return !a.is_nan() && mpfr_cmp_si(a.raw(), n) >= 0; }

inline Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_ui(const Real& a, unsigned long n) {
  Real r(a.precision());
  mpfr_pow_ui(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& a, long n) {
  Real r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& a, const Real& b) {
  Real r(detail::join(a, b));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

inline Real log_ui(unsigned long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_log_ui(r.raw(), n, MPFR_RNDN);
  return r;
}
inline Real const_pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline Real ui_pow_ui(unsigned long base, unsigned long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_ui_pow_ui(r.raw(), base, e, MPFR_RNDN);
  return r;
}
/// Exact power of two, 2^e.
inline Real pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}
/// 10^e at the given precision (e may be negative).
inline Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

/// One unit in the last place at x's magnitude: 2^(exp(x) - prec).
/// For x == 0 this is the minimal scale 2^(-prec).
inline Real ulp(const Real& x) {
  long e = x.is_zero() ? 0 : static_cast<long>(x.exponent());
  return pow2(e - static_cast<long>(x.precision()), x.precision());
}

std::string to_fixed(const Real& x, int digits);
std::string to_scientific(const Real& x, int digits);

/// Parses a decimal literal at the given precision. Throws ParseError.
Real real_from_string(const std::string& text, mpfr_prec_t prec);

}  // namespace zetablock
