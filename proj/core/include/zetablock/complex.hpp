#pragma once

#include "zetablock/real.hpp"

namespace zetablock {

/// Rectangular complex value over Real. Holds s = sigma + i t throughout
/// the library; all arithmetic rounds to nearest at the component precision.
struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex zero(mpfr_prec_t prec) { return {Real(0L, prec), Real(0L, prec)}; }
  static Complex one(mpfr_prec_t prec) { return {Real(1L, prec), Real(0L, prec)}; }
  static Complex from_real(Real r) {
    Real z(0L, r.precision());
    return {std::move(r), std::move(z)};
  }

  mpfr_prec_t precision() const { return detail::join(re, im); }
  bool is_real() const { return im.is_zero(); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, const Real& x) { return {a.re + x, a.im}; }
inline Complex operator+(const Complex& a, long n) { return {a.re + n, a.im}; }
inline Complex operator-(const Complex& a, const Real& x) { return {a.re - x, a.im}; }
inline Complex operator-(const Real& x, const Complex& a) { return {x - a.re, -a.im}; }
inline Complex operator-(long n, const Complex& a) { return {n - a.re, -a.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& x) { return {a.re * x, a.im * x}; }
inline Complex operator*(const Real& x, const Complex& a) { return a * x; }
inline Complex operator/(const Complex& a, const Real& x) { return {a.re / x, a.im / x}; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
/// |a|^2 = re^2 + im^2.
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }

inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Complex rounded_to(const Complex& a, mpfr_prec_t prec) {
  return {a.re.rounded_to(prec), a.im.rounded_to(prec)};
}

}  // namespace zetablock
