#include "zetablock/bounds.hpp"

#include <stdexcept>

#include "zetablock/errors.hpp"

namespace zetablock {

Real cstar_sigma_bound_b2(const Real& sigma, int m) {
  const mpfr_prec_t p = sigma.precision();
  Real two_sigma = pow(Real(2L, p), sigma);
  return (two_sigma - pow2(-m, p)) / (two_sigma - 1L);
}

namespace {

/// gamma_{sigma+j,b} for j = 1, 2, ... advanced one j at a time by
/// multiplying the per-a powers (real exponents need one pow call each
/// at startup only).
class RealPowerSums {
 public:
  RealPowerSums(int b, const Real& sigma, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.mantissa_bits;
    for (int a = 1; a < b; ++a)
      apow_.push_back(real_pow(Real(static_cast<long>(a), p), sigma, ctx));
  }

  /// Returns gamma_{sigma+j} for the next j.
  Real advance() {
    KahanReal acc(apow_.front().precision());
    for (size_t i = 0; i < apow_.size(); ++i) {
      apow_[i] *= static_cast<long>(i + 1);
      acc.add(apow_[i]);
    }
    return acc.result();
  }

 private:
  std::vector<Real> apow_;  // apow_[a-1] = a^{sigma+j}
};

void require_base_and_sigma(int b, const Real& sigma) {
  if (b < 2) throw std::invalid_argument("base must be >= 2");
  if (!(sigma > 0L)) throw std::invalid_argument("sigma must be > 0");
}

}  // namespace

BoundProfile make_bound_profile(int b, const Real& sigma, int m_max,
                                const PrecisionContext& ctx, bool tighter_sigma_gt1) {
  require_base_and_sigma(b, sigma);
  const mpfr_prec_t p = ctx.mantissa_bits;
  BoundProfile profile;
  profile.b = b;
  profile.sigma = sigma.rounded_to(p);
  profile.tighter_sigma_gt1 = tighter_sigma_gt1;
  profile.lower = real_pow(Real(static_cast<long>(b), p), -profile.sigma, ctx);
  profile.p_bound = p_bound(b, profile.sigma, ctx);

  const bool clamp = tighter_sigma_gt1 && profile.sigma > 1L;
  const Real one(1L, p);
  Real bpow = real_pow(Real(static_cast<long>(b), p), profile.sigma, ctx);  // b^{sigma+j}
  RealPowerSums gammas(b, profile.sigma, ctx);
  Real product = one;
  profile.upper_sigma.push_back(one);
  for (int j = 1; j <= m_max; ++j) {
    bpow *= static_cast<long>(b);
    const Real den = bpow - static_cast<long>(b);
    product *= (den + gammas.advance()) / den;
    profile.upper_sigma.push_back(clamp ? min(product, one) : product);
  }
  return profile;
}

Real cstar_sigma_bound_product(int b, const Real& sigma, int m, const PrecisionContext& ctx) {
  require_base_and_sigma(b, sigma);
  const mpfr_prec_t p = ctx.mantissa_bits;
  Real bpow = real_pow(Real(static_cast<long>(b), p), sigma, ctx);
  RealPowerSums gammas(b, sigma, ctx);
  Real product(1L, p);
  for (int j = 1; j <= m; ++j) {
    bpow *= static_cast<long>(b);
    const Real den = bpow - static_cast<long>(b);
    product *= (den + gammas.advance()) / den;
  }
  return product;
}

Real p_bound(int b, const Real& sigma, const PrecisionContext& ctx) {
  require_base_and_sigma(b, sigma);
  const mpfr_prec_t p = ctx.mantissa_bits;
  // Factor j is 1 + e_j with e_j = gamma_{sigma+j} / (b^{sigma+j} - b);
  // successive excesses satisfy e_{j+1} <= e_j (b-1)/b, so once e_j drops
  // below the cutoff the log tail is at most e_j (b-1).
  const Real cutoff = pow2(-static_cast<long>(p) - 8, p);
  Real bpow = real_pow(Real(static_cast<long>(b), p), sigma, ctx);
  RealPowerSums gammas(b, sigma, ctx);
  Real product(1L, p);
  for (;;) {
    bpow *= static_cast<long>(b);
    const Real excess = gammas.advance() / (bpow - static_cast<long>(b));
    if (excess < cutoff) {
      product *= exp(excess * static_cast<long>(b - 1));
      return product;
    }
    product *= excess + 1L;
  }
}

Real cstar_abs_bound(const BoundProfile& profile, const PochhammerRatio& poch, int m) {
  if (poch.m != m)
    throw std::invalid_argument("cstar_abs_bound: pochhammer ratio not at index m");
  if (m >= static_cast<int>(profile.upper_sigma.size()))
    throw std::invalid_argument("cstar_abs_bound: profile not extended to m");
  return poch.value * profile.upper_sigma[static_cast<size_t>(m)];
}

TailMajorant::TailMajorant(const Complex& s, int b, const PrecisionContext& ctx)
    : s_(rounded_to(s, ctx.mantissa_bits)), b_(b), ctx_(ctx), sigma_(s_.re) {
  require_base_and_sigma(b, sigma_);
  const mpfr_prec_t p = ctx.mantissa_bits;
  bpow_ = real_pow(Real(static_cast<long>(b), p), sigma_, ctx);
  for (int a = 1; a < b; ++a)
    apow_.push_back(real_pow(Real(static_cast<long>(a), p), sigma_, ctx));
  coeff_.push_back(Real(1L, p));
}

void TailMajorant::extend(int m) {
  const mpfr_prec_t p = ctx_.mantissa_bits;
  // Factor j combines the pochhammer-ratio step f_j = |s+j|/(sigma+j) with
  // the product-bound step g_j; q_[j-1] holds f_j g_j.
  for (int j = static_cast<int>(q_.size()) + 1; j <= m; ++j) {
    bpow_ *= static_cast<long>(b_);
    KahanReal gamma(p);
    for (size_t i = 0; i < apow_.size(); ++i) {
      apow_[i] *= static_cast<long>(i + 1);
      gamma.add(apow_[i]);
    }
    const Real den = bpow_ - static_cast<long>(b_);
    const Real g = (den + gamma.result()) / den;
    const Real f = hypot(sigma_ + j, s_.im) / (sigma_ + j);
    q_.push_back(f * g);
    coeff_.push_back(coeff_.back() * q_.back());
  }
}

const Real& TailMajorant::coeff_bound(int m) {
  extend(m);
  return coeff_[static_cast<size_t>(m)];
}

const Real& TailMajorant::q(int m) {
  extend(m + 1);
  return q_[static_cast<size_t>(m)];
}

TruncationPlan plan_truncation(TailMajorant& majorant, int ell, const Real& tol, int max_terms) {
  if (ell < 2) throw std::invalid_argument("plan_truncation: ell must be >= 2");
  if (!(tol > 0L)) throw std::invalid_argument("plan_truncation: tol must be > 0");
  const PrecisionContext& ctx = majorant.context();
  const mpfr_prec_t p = ctx.mantissa_bits;
  const int b = majorant.base();
  const Real& sigma = majorant.sigma();
  const Real one(1L, p);
  const Real abs_s = abs(majorant.s());
  const Real block_shrink = pow_si(Real(static_cast<long>(b), p), -(ell - 1));
  // b^{(ell-1)(1-sigma-M)}, advanced by block_shrink per candidate M.
  Real tail_pow = real_pow(Real(static_cast<long>(b), p),
                           (one - sigma) * static_cast<long>(ell - 1), ctx);
  bool contracted = false;
  for (int M = 0; M <= max_terms; ++M) {
    const Real rho = majorant.q(M) * block_shrink;
    if (rho < one) {
      contracted = true;
      // Sum over m > M of |s|/(sigma+m) * C(M) q^{m-M} * (b-1) b^{(ell-1)(1-sigma-m)}
      // with sigma+m >= sigma+M+1 pulled out front; geometric in rho.
      Real tail = abs_s / (sigma + static_cast<long>(M + 1));
      tail *= majorant.coeff_bound(M);
      tail *= static_cast<long>(b - 1);
      tail *= tail_pow;
      tail *= rho / (one - rho);
      if (tail <= tol) {
        TruncationPlan plan;
        plan.M = M;
        plan.remainder_bound = tail;
        plan.ratio = rho;
        plan.per_term_majorant =
            "C(M)*q^(m-M), q = |s+M+1|/(sigma+M+1) * product-bound factor at M+1";
        plan.ell = ell;
        plan.b = b;
        return plan;
      }
    }
    tail_pow *= block_shrink;
  }
  if (contracted)
    throw MaxTermsExceeded("tail bound did not reach tolerance within max_terms");
  throw PlanFailure("geometric ratio never below 1 up to max_terms; increase ell");
}

TruncationPlan plan_truncation(const Complex& s, int b, int ell, const Real& tol,
                               const PrecisionContext& ctx, int max_terms) {
  TailMajorant majorant(s, b, ctx);
  return plan_truncation(majorant, ell, tol, max_terms);
}

}  // namespace zetablock
