#pragma once

#include <optional>
#include <vector>

#include "zetablock/numerics.hpp"

namespace zetablock {

/// Integer-exponent power sums gamma_j = sum_{a=1}^{b-1} a^j, j = 1..M.
/// For b = 2 every entry is 1.
struct GammaTable {
  int b = 0;
  mpfr_prec_t prec = 0;
  std::vector<Real> values;  // values[j-1] = gamma_j

  int max_index() const { return static_cast<int>(values.size()); }
  const Real& gamma(int j) const { return values.at(static_cast<size_t>(j) - 1); }
};

/// Builds the table for j = 1..m_max. Rejects b < 2.
GammaTable gamma_table(int b, int m_max, const PrecisionContext& ctx);
void gamma_table_extend(GammaTable& table, int m_max);

/// Coefficient sequences for fixed (b, s, precision), extended in place.
/// cstar[m] follows the weighted recurrence with falling-factorial weights;
/// c[m] (built on demand) follows the binomial-weighted recurrence. They are
/// tied by cstar[m] = (s+1)_m / m! * c[m].
class CoefficientTable {
 public:
  CoefficientTable(int b, Complex s, PrecisionContext ctx);

  int base() const { return b_; }
  const Complex& s() const { return s_; }
  const PrecisionContext& context() const { return ctx_; }

  const std::vector<Complex>& cstar() const { return cstar_; }
  const std::vector<Complex>& c() const { return c_; }
  int cstar_max_index() const { return static_cast<int>(cstar_.size()) - 1; }
  int c_max_index() const { return static_cast<int>(c_.size()) - 1; }

  friend void cstar_extend(CoefficientTable& table, int upto);
  friend void c_extend(CoefficientTable& table, int upto);

 private:
  int b_;
  Complex s_;
  PrecisionContext ctx_;
  GammaTable gammas_;
  std::vector<Complex> cstar_;
  std::vector<Complex> c_;
  Complex cstar_bpow_;  // b^{s+m} for m = cstar_max_index()
  Complex c_bpow_;      // b^{s+m} for m = c_max_index()
};

/// Ensures cstar[0..upto] are present.
void cstar_extend(CoefficientTable& table, int upto);
/// Ensures c[0..upto] are present.
void c_extend(CoefficientTable& table, int upto);

/// Running value of |(s+1)_m| / (sigma+1)_m, non-decreasing in m and
/// identically 1 on the real axis.
struct PochhammerRatio {
  Complex s;
  Real sigma;
  int m = 0;
  Real value;
};

PochhammerRatio pochhammer_ratio(const Complex& s, const PrecisionContext& ctx);
void pochhammer_ratio_extend(PochhammerRatio& ratio, int upto);

/// (s+1)_m / m! as a complex value, the scale between c and cstar.
Complex pochhammer_over_factorial(const Complex& s, int m, const PrecisionContext& ctx);

}  // namespace zetablock
