#include "zetablock/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "zetablock/errors.hpp"
#include "zetablock/oracle.hpp"

namespace zetablock {

namespace {

struct CheckContext {
  CheckOptions options;
  PrecisionContext ctx;
  std::mt19937_64 rng;

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  int pick(std::initializer_list<int> values) {
    std::uniform_int_distribution<size_t> d(0, values.size() - 1);
    return *(values.begin() + d(rng));
  }
};

std::string err_str(const Real& e) { return to_scientific(e, 3); }

CheckResult run_timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult result;
  result.name = name;
  result.pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

void track_max(Real& worst, const Real& err) {
  if (worst.is_nan() || err > worst) worst = err;
}

CheckResult check_ell_invariance(CheckContext& cc) {
  return run_timed("ell-invariance", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const Real tol = pow10(-25, p);
    std::vector<Complex> points;
    points.push_back({Real(0.5, p), real_from_string("14.134725", p)});
    if (!cc.options.quick) {
      points.push_back({Real(cc.uniform(0.3, 2.5), p), Real(cc.uniform(-20.0, 20.0), p)});
      points.push_back({Real(cc.uniform(0.3, 2.5), p), Real(0.0, p)});
    }
    Real worst(p);
    for (const Complex& s : points) {
      CoefficientTable shared(2, s, cc.ctx);
      std::vector<EvaluationResult> results;
      for (int ell : {2, 3, 5, 8}) {
        SeriesConfig cfg{2, ell, cc.ctx, 20000};
        results.push_back(eta_b(s, cfg, tol, &shared));
      }
      for (size_t i = 0; i < results.size(); ++i)
        for (size_t j = i + 1; j < results.size(); ++j) {
          const Real diff = abs(results[i].value - results[j].value);
          const Real allowed = results[i].remainder_bound + results[j].remainder_bound +
                               8L * ulp(abs(results[i].value));
          track_max(worst, diff - allowed);
          if (!(diff <= allowed)) out.pass = false;
        }
    }
    out.detail = "worst(diff - allowed) = " + err_str(worst);
  });
}

CheckResult check_base_invariance(CheckContext& cc) {
  return run_timed("base-invariance", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const Real tol = pow10(-25, p);
    const int samples = cc.options.quick ? 6 : 50;
    Real worst(p);
    int used = 0;
    while (used < samples) {
      Complex s{Real(cc.uniform(0.2, 3.0), p), Real(cc.uniform(-50.0, 50.0), p)};
      try {
        SeriesConfig cfg2{2, 0, cc.ctx, 20000};
        SeriesConfig cfg3{3, 0, cc.ctx, 20000};
        const EvaluationResult z2 = zeta(s, cfg2, tol);
        const EvaluationResult z3 = zeta(s, cfg3, tol);
        if (z2.b != 2 || z3.b != 3) continue;  // factor near zero, resample
        const Real diff = abs(z2.value - z3.value);
        const Real allowed =
            z2.remainder_bound + z3.remainder_bound + 8L * ulp(abs(z2.value));
        track_max(worst, diff - allowed);
        if (!(diff <= allowed)) out.pass = false;
        ++used;
      } catch (const BaseExhausted&) {
        continue;
      }
    }
    out.detail = "worst(diff - allowed) = " + err_str(worst) + " over " +
                 std::to_string(samples) + " samples";
  });
}

CheckResult check_certified_error(CheckContext& cc) {
  return run_timed("certified-error", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const Real tol = pow10(-(cc.options.digits), p);
    const int samples = cc.options.quick ? 5 : 25;
    const Real rounding_slack = pow2(-static_cast<long>(p) + 16, p);
    Real worst_tail(p), worst_oracle(p);
    int used = 0, attempts = 0;
    while (used < samples && attempts < 40 * samples) {
      ++attempts;
      const int b = cc.pick({2, 3, 5});
      int ell = cc.pick({2, 3, 4, 5, 6, 7, 8});
      // keep the block affordable: (b-1) b^{ell-1} <= 20000
      while ((b - 1) * std::pow(b, ell - 1) > 20000) --ell;
      Complex s{Real(cc.uniform(0.1, 4.0), p), Real(cc.uniform(-60.0, 60.0), p)};

      try {
        SeriesConfig cfg{b, ell, cc.ctx, 20000};
        const EvaluationResult r = eta_b(s, cfg, tol);

        // Tail containment: adding 50 terms at doubled precision must stay
        // within the certified remainder.
        SeriesConfig fine = cfg;
        fine.ctx = cc.ctx.doubled();
        const Complex more = eta_b_partial(s, fine, r.terms_used + 50);
        const Real tail_diff = abs(r.value - more);
        track_max(worst_tail, tail_diff - r.remainder_bound);
        if (!(tail_diff <= r.remainder_bound + rounding_slack)) out.pass = false;

        // Independent reference agreement.
        const Complex ref = eta_b_reference(s, b, cc.options.digits + 10);
        const Real ref_diff = abs(r.value - ref);
        const Real allowed = r.remainder_bound + rounding_slack;
        track_max(worst_oracle, ref_diff - allowed);
        if (!(ref_diff <= allowed)) out.pass = false;
        ++used;
      } catch (const PlanFailure&) {
      } catch (const MaxTermsExceeded&) {
      } catch (const NearPole&) {
        // resample: this point sits too close to a reference-factor zero
      }
    }
    if (used < samples) {
      out.pass = false;
      out.detail = "could not gather enough admissible samples";
      return;
    }
    out.detail = "worst tail excess = " + err_str(worst_tail) +
                 ", worst oracle excess = " + err_str(worst_oracle);
  });
}

CheckResult check_oracle_agreement(CheckContext& cc) {
  return run_timed("oracle-agreement", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const PrecisionContext oracle_ctx = cc.ctx.doubled();
    BernoulliCache bernoulli;
    const int m_max = 40;
    std::vector<std::pair<int, Complex>> cases;
    cases.push_back({2, Complex{Real(2L, p), Real(0L, p)}});
    if (!cc.options.quick) {
      cases.push_back({3, Complex{Real(1.5, p), Real(2.0, p)}});
      cases.push_back({5, Complex{Real(2.5, p), Real(-1.0, p)}});
    }
    Real worst(p);
    for (const auto& [b, s] : cases) {
      CoefficientTable table(b, s, cc.ctx);
      cstar_extend(table, m_max);
      for (int m = 0; m <= m_max; ++m) {
        const Complex via_bernoulli = cstar_via_bernoulli(s, m, b, oracle_ctx, bernoulli);
        const Real diff = abs(table.cstar()[static_cast<size_t>(m)] - via_bernoulli);
        // Cancellation in the closed form widens the allowance with m.
        const Real allowed = pow2(-static_cast<long>(p) + m + 24, p);
        track_max(worst, diff - allowed);
        if (!(diff <= allowed)) out.pass = false;
      }
    }
    out.detail = "worst(diff - allowed) = " + err_str(worst);
  });
}

CheckResult check_bound_sandwich(CheckContext& cc) {
  return run_timed("bound-sandwich", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const int m_max = cc.options.quick ? 60 : 200;
    const Real b2_tol = pow10(-30, p);
    for (int b : {2, 3, 5}) {
      for (double sigma_d : {0.3, 1.0, 2.5}) {
        const Real sigma(sigma_d, p);
        const Complex s = Complex::from_real(sigma);
        CoefficientTable table(b, s, cc.ctx);
        cstar_extend(table, m_max);
        BoundProfile profile = make_bound_profile(b, sigma, m_max, cc.ctx);
        for (int m = 0; m <= m_max; ++m) {
          const Real& value = table.cstar()[static_cast<size_t>(m)].re;
          const Real& upper = profile.upper_sigma[static_cast<size_t>(m)];
          if (!(profile.lower < value && value <= upper && upper <= profile.p_bound)) {
            out.pass = false;
            out.detail = "sandwich violated at b=" + std::to_string(b) +
                         " sigma=" + std::to_string(sigma_d) + " m=" + std::to_string(m);
            return;
          }
          if (b == 2) {
            const Real closed = cstar_sigma_bound_b2(sigma, m);
            if (!(abs(closed - upper) <= b2_tol)) {
              out.pass = false;
              out.detail = "b=2 closed form != product at m=" + std::to_string(m);
              return;
            }
          }
        }
      }
    }
    out.detail = "all sandwiches hold to m=" + std::to_string(m_max);
  });
}

CheckResult check_periodicity(CheckContext& cc) {
  return run_timed("periodicity", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const int m_max = cc.options.quick ? 30 : 60;
    const Real tolerance = pow2(-static_cast<long>(p) + 16, p);
    Real worst(p);
    for (int b : {2, 3}) {
      const Real period = 2L * const_pi(p) / log_ui(static_cast<unsigned long>(b), p);
      Complex s{Real(cc.uniform(0.4, 2.0), p), Real(cc.uniform(-3.0, 3.0), p)};
      Complex shifted{s.re, s.im + period};
      CoefficientTable base_table(b, s, cc.ctx);
      CoefficientTable shifted_table(b, shifted, cc.ctx);
      c_extend(base_table, m_max);
      c_extend(shifted_table, m_max);
      for (int m = 0; m <= m_max; ++m) {
        const Real diff = abs(base_table.c()[static_cast<size_t>(m)] -
                              shifted_table.c()[static_cast<size_t>(m)]);
        track_max(worst, diff - tolerance);
        if (!(diff <= tolerance)) out.pass = false;
      }
      // cstar is not periodic: the pochhammer scale shifts with s.
      cstar_extend(base_table, 1);
      cstar_extend(shifted_table, 1);
      const Real cstar_diff = abs(base_table.cstar()[1] - shifted_table.cstar()[1]);
      if (!(cstar_diff > 100L * tolerance)) {
        out.pass = false;
        out.detail = "cstar unexpectedly periodic at b=" + std::to_string(b);
        return;
      }
    }
    out.detail = "worst(diff - tol) = " + err_str(worst);
  });
}

CheckResult check_w_identities(CheckContext& cc) {
  return run_timed("w-identities", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const int m_max = 30;
    Real worst(p);
    for (int b : {2, 3, 5}) {
      for (double sigma_d : {0.3, 1.0, 2.5}) {
        const Real sigma(sigma_d, p);
        std::vector<Real> w;
        for (int m = 0; m <= m_max; ++m) w.push_back(w_closed(sigma, b, m, cc.ctx));
        if (!(abs(w[0] - 1L) <= 16L * ulp(w[0]))) out.pass = false;
        // (b^{m+sigma} - 1) w_m = sum_j C(m,j) (b-1)^j w_{m-j}
        Real bpow = real_pow(Real(static_cast<long>(b), p), sigma, cc.ctx);
        for (int m = 1; m <= m_max; ++m) {
          bpow *= static_cast<long>(b);
          const Real lhs = (bpow - 1L) * w[static_cast<size_t>(m)];
          KahanReal rhs(p);
          mpz_class binom = 1;
          mpz_class bm1_pow = 1;
          for (int j = 1; j <= m; ++j) {
            binom *= m - j + 1;
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(j));
            bm1_pow *= b - 1;
            rhs.add(Real(binom * bm1_pow, p) * w[static_cast<size_t>(m - j)]);
          }
          const Real diff = abs(lhs - rhs.result());
          const Real allowed = 16L * ulp(max(abs(lhs), abs(rhs.result())));
          track_max(worst, diff - allowed);
          if (!(diff <= allowed)) out.pass = false;
        }
        // chain: b^sigma w_m > m!/(sigma+1)_m, and w_m minorizes c_m(sigma)
        const Real bsig = real_pow(Real(static_cast<long>(b), p), sigma, cc.ctx);
        CoefficientTable table(b, Complex::from_real(sigma), cc.ctx);
        c_extend(table, m_max);
        Real beta(1L, p);  // m!/(sigma+1)_m
        for (int m = 1; m <= m_max; ++m) {
          beta *= static_cast<long>(m);
          beta /= sigma + static_cast<long>(m);
          if (!(bsig * w[static_cast<size_t>(m)] > beta)) out.pass = false;
          if (!(table.c()[static_cast<size_t>(m)].re >= w[static_cast<size_t>(m)]))
            out.pass = false;
        }
      }
    }
    out.detail = "worst recurrence residual excess = " + err_str(worst);
  });
}

CheckResult check_equality_case(CheckContext& cc) {
  return run_timed("equality-case", [&](CheckResult& out) {
    const mpfr_prec_t p = cc.ctx.mantissa_bits;
    const int m_max = 50;
    const Real tolerance = pow10(-(cc.options.digits - 4), p);
    const Real sigma(0.7, p);
    const Real period = 2L * const_pi(p) / log_ui(2, p);
    Real worst(p);
    CoefficientTable real_table(2, Complex::from_real(sigma), cc.ctx);
    cstar_extend(real_table, m_max);
    for (int k = 1; k <= 2; ++k) {
      const Complex s{sigma, Real(static_cast<long>(k), p) * period};
      CoefficientTable table(2, s, cc.ctx);
      cstar_extend(table, m_max);
      PochhammerRatio poch = pochhammer_ratio(s, cc.ctx);
      for (int m = 0; m <= m_max; ++m) {
        pochhammer_ratio_extend(poch, m);
        const Real lhs = abs(table.cstar()[static_cast<size_t>(m)]);
        const Real rhs = poch.value * real_table.cstar()[static_cast<size_t>(m)].re;
        const Real diff = abs(lhs - rhs);
        track_max(worst, diff - tolerance);
        if (!(diff <= tolerance)) out.pass = false;
      }
    }
    out.detail = "worst(|eq gap| - tol) = " + err_str(worst);
  });
}

}  // namespace

std::vector<CheckResult> run_selfchecks(const CheckOptions& options) {
  CheckContext cc{options, PrecisionContext::for_digits(options.digits),
                  std::mt19937_64(options.seed)};
  std::vector<CheckResult> results;
  results.push_back(check_ell_invariance(cc));
  results.push_back(check_base_invariance(cc));
  results.push_back(check_certified_error(cc));
  results.push_back(check_oracle_agreement(cc));
  results.push_back(check_bound_sandwich(cc));
  results.push_back(check_periodicity(cc));
  results.push_back(check_w_identities(cc));
  results.push_back(check_equality_case(cc));
  return results;
}

}  // namespace zetablock
