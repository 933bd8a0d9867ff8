#pragma once

#include <gmpxx.h>

#include "zetablock/numerics.hpp"

namespace zetablock {

/// Exact rational, normalized with positive denominator.
using RationalQ = mpq_class;

/// Exact Bernoulli numbers B_0..B_n via the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0 (so B_1 = -1/2). Extension is
/// single-writer; a filled cache is safe to share for reads.
class BernoulliCache {
 public:
  BernoulliCache();
  /// B_n, computing and caching anything missing.
  const RationalQ& get(int n);
  int max_index() const { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<RationalQ> values_;
};

/// Closed Bernoulli form of the meromorphic u_m(s). Throws NearPole when a
/// denominator b^{s+j} - b is within 2^-(mantissa_bits/4) of zero.
Complex u_m_closed(const Complex& s, int m, int b, const PrecisionContext& ctx,
                   BernoulliCache& bernoulli);

/// Independent route to cstar_m(s): (s+1)_m / m! * (1 - b^{1-s}) * u_m(s).
/// A correctness witness for the recurrence, not an evaluation path; the
/// binomial sum cancels increasingly with m.
Complex cstar_via_bernoulli(const Complex& s, int m, int b, const PrecisionContext& ctx,
                            BernoulliCache& bernoulli);

/// Minorant sequence from the lower-bound argument:
/// w_m = (1 - b^-sigma) sum_{k>=0} b^{-sigma k} (1 - b^-k)^m.
Real w_closed(const Real& sigma, int b, int m, const PrecisionContext& ctx);

/// eta(s) to `digits` decimals by Chebyshev-weighted acceleration of the
/// alternating series, evaluated with guard digits and validated by
/// agreement between two independent acceleration orders. Fully
/// independent of the coefficient recurrence.
Complex eta_reference(const Complex& s, int digits);

/// zeta(s) = eta(s) / (1 - 2^{1-s}); throws NearPole near the factor zeros.
Complex zeta_reference(const Complex& s, int digits);

/// eta_b(s) = (1 - b^{1-s}) zeta(s) by the reference route.
Complex eta_b_reference(const Complex& s, int b, int digits);

}  // namespace zetablock
