#pragma once

#include <string>
#include <vector>

#include "zetablock/coefficients.hpp"

namespace zetablock {

/// Closed form of the coefficient bound for b = 2: (2^s - 2^-m)/(2^s - 1).
Real cstar_sigma_bound_b2(const Real& sigma, int m);

/// Per-index upper bounds for cstar at real argument sigma, plus the
/// uniform product limit P_b(sigma) and the universal lower bound b^-sigma.
struct BoundProfile {
  int b = 0;
  Real sigma;
  std::vector<Real> upper_sigma;  // upper_sigma[m], m = 0.. ; [0] = 1
  Real lower;                     // b^-sigma
  Real p_bound;                   // P_b(sigma), limit of the products
  bool tighter_sigma_gt1 = false;
};

/// Builds the profile up to index m_max. With tighter_sigma_gt1 and
/// sigma > 1 the per-index bounds are clamped at 1 (known from the
/// related bounded quantities; not re-derived here).
BoundProfile make_bound_profile(int b, const Real& sigma, int m_max,
                                const PrecisionContext& ctx,
                                bool tighter_sigma_gt1 = false);

/// Finite product bound prod_{j<=m} (b^{sigma+j} - b + gamma_{sigma+j}) / (b^{sigma+j} - b).
Real cstar_sigma_bound_product(int b, const Real& sigma, int m, const PrecisionContext& ctx);

/// Infinite product limit P_b(sigma): factors are accumulated until their
/// excess over 1 falls below 2^-(mantissa_bits+8); the remaining log-product
/// tail is bounded geometrically and folded in as an upward adjustment.
Real p_bound(int b, const Real& sigma, const PrecisionContext& ctx);

/// |cstar_m(s)| <= poch.value * upper_sigma[m]. Requires poch.m == m and
/// the profile extended to m. Non-decreasing in m.
Real cstar_abs_bound(const BoundProfile& profile, const PochhammerRatio& poch, int m);

/// Tail majorant machinery shared by truncation planning across block
/// exponents: C(m) majorizes |cstar_m(s)| and q(m) is a valid geometric
/// ratio for everything past index m (both factor sequences decrease).
class TailMajorant {
 public:
  TailMajorant(const Complex& s, int b, const PrecisionContext& ctx);

  const Complex& s() const { return s_; }
  const Real& sigma() const { return sigma_; }
  int base() const { return b_; }
  const PrecisionContext& context() const { return ctx_; }

  const Real& coeff_bound(int m);  // C(m)
  const Real& q(int m);            // f_{m+1} * g_{m+1}

 private:
  void extend(int m);

  Complex s_;
  int b_;
  PrecisionContext ctx_;
  Real sigma_;
  Real bpow_;                 // b^{sigma+j} for the last computed factor
  std::vector<Real> apow_;    // a^{sigma+j} per a < b, advanced with j
  std::vector<Real> coeff_;   // C(m)
  std::vector<Real> q_;       // q(m)
};

/// Result of truncation planning: keep terms m = 0..M.
struct TruncationPlan {
  int M = 0;
  Real remainder_bound;
  Real ratio;  // effective geometric tail ratio rho < 1
  std::string per_term_majorant;
  int ell = 0;
  int b = 0;
};

/// Finds the smallest M whose certified tail bound is <= tol. Throws
/// PlanFailure when no index up to max_terms yields a ratio < 1 (increase
/// ell), MaxTermsExceeded when the ratio contracts but the bound never
/// reaches tol within the cap.
TruncationPlan plan_truncation(TailMajorant& majorant, int ell, const Real& tol, int max_terms);
TruncationPlan plan_truncation(const Complex& s, int b, int ell, const Real& tol,
                               const PrecisionContext& ctx, int max_terms = 10000);

}  // namespace zetablock
