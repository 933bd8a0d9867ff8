#include "zetablock/series.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "zetablock/errors.hpp"

namespace zetablock {

namespace {

constexpr long kBlockSizeCap = 4096;
constexpr int kCandidateBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

long pow_long(int b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_half_plane(const Complex& s) {
  if (!(s.re > 0L)) throw std::invalid_argument("Re s must be > 0");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BlockState make_block_state(const Complex& s, int b, int ell, const PrecisionContext& ctx) {
  if (ell < 2) throw std::invalid_argument("block needs ell >= 2");
  BlockState block;
  block.first = pow_long(b, ell - 1);
  const long last = pow_long(b, ell);  // exclusive
  const Complex minus_s = -s;
  const mpfr_prec_t p = ctx.mantissa_bits;
  block.values.reserve(static_cast<size_t>(last - block.first));
  block.inv.reserve(static_cast<size_t>(last - block.first));
  for (long n = block.first; n < last; ++n) {
    block.values.push_back(int_pow_complex(static_cast<unsigned long>(n), minus_s, ctx));
    block.inv.push_back(1L / Real(n, p));
  }
  return block;
}

Complex block_sum(const BlockState& block) {
  KahanComplex acc(block.values.front().precision());
  for (const Complex& v : block.values) acc.add(v);
  return acc.result();
}

void block_step(BlockState& block) {
  for (size_t i = 0; i < block.values.size(); ++i)
    block.values[i] = block.values[i] * block.inv[i];
  ++block.m;
}

Complex head_sum(const Complex& s, const SeriesConfig& cfg) {
  require_half_plane(s);
  if (cfg.ell < 2) throw std::invalid_argument("head_sum needs ell >= 2");
  const mpfr_prec_t p = cfg.ctx.mantissa_bits;
  const Complex one = Complex::one(p);
  // (b^s - b)/b^s = 1 - b^{1-s}
  const Complex prefactor =
      one - int_pow_complex(static_cast<unsigned long>(cfg.b), one - s, cfg.ctx);
  KahanComplex acc(p);
  const long limit = pow_long(cfg.b, cfg.ell - 1);  // exclusive
  for (long n = 1; n < limit; ++n)
    acc.add(int_pow_complex(static_cast<unsigned long>(n), -s, cfg.ctx));
  return prefactor * acc.result();
}

TruncationPlan choose_plan(TailMajorant& majorant, const Real& tol, int max_terms) {
  const mpfr_prec_t p = majorant.context().mantissa_bits;
  const int b = majorant.base();
  const Real ratio_target = Real(1L, p) / 8L;
  std::optional<TruncationPlan> best;
  for (int ell = 2; ell == 2 || (b - 1) * pow_long(b, ell - 1) <= kBlockSizeCap; ++ell) {
    try {
      TruncationPlan plan = plan_truncation(majorant, ell, tol, max_terms);
      if (plan.ratio <= ratio_target) return plan;
      if (!best || plan.ratio < best->ratio) best = plan;
    } catch (const Error&) {
      // This ell cannot contract or needs too many terms; a larger one may.
    }
  }
  if (best) return *best;
  throw PlanFailure("no block exponent up to the size cap yields a usable plan");
}

namespace {

/// Shared core: plans (unless given a fixed term count), then runs the
/// head + block series pipeline.
EvaluationResult evaluate_eta_b(const Complex& s_in, const SeriesConfig& cfg, const Real* tol,
                                int fixed_terms, CoefficientTable* shared_table) {
  const auto t0 = std::chrono::steady_clock::now();
  require_half_plane(s_in);
  if (cfg.b < 2) throw std::invalid_argument("base must be >= 2");
  const mpfr_prec_t p = cfg.ctx.mantissa_bits;
  const Complex s = rounded_to(s_in, p);

  EvaluationResult result;
  result.b = cfg.b;

  int terms = fixed_terms;
  if (tol != nullptr) {
    TailMajorant majorant(s, cfg.b, cfg.ctx);
    TruncationPlan plan = cfg.ell == 0 ? choose_plan(majorant, *tol, cfg.max_terms)
                                       : plan_truncation(majorant, cfg.ell, *tol, cfg.max_terms);
    result.ell = plan.ell;
    result.remainder_bound = plan.remainder_bound;
    terms = plan.M;
  } else {
    if (cfg.ell < 2) throw std::invalid_argument("fixed-term evaluation needs ell >= 2");
    result.ell = cfg.ell;
    result.remainder_bound = Real(p);  // no certificate for fixed term counts
  }
  result.terms_used = terms;

  SeriesConfig resolved = cfg;
  resolved.ell = result.ell;
  result.head = head_sum(s, resolved);

  CoefficientTable local(cfg.b, s, cfg.ctx);
  CoefficientTable& table = shared_table != nullptr ? *shared_table : local;
  if (shared_table != nullptr &&
      (table.base() != cfg.b || table.s() != s ||
       table.context().mantissa_bits != cfg.ctx.mantissa_bits))
    throw std::invalid_argument("shared CoefficientTable keyed to different (b, s, precision)");
  cstar_extend(table, terms);

  BlockState block = make_block_state(s, cfg.b, result.ell, cfg.ctx);
  KahanComplex acc(p);
  for (int m = 0; m <= terms; ++m) {
    const Complex term = (s / (s + static_cast<long>(m))) *
                         table.cstar()[static_cast<size_t>(m)] * block_sum(block);
    acc.add(m % 2 == 0 ? term : -term);
    if (m < terms) block_step(block);
  }
  result.value = result.head + acc.result();
  result.elapsed_seconds = seconds_since(t0);
  return result;
}

}  // namespace

EvaluationResult eta_b(const Complex& s, const SeriesConfig& cfg, const Real& tol,
                       CoefficientTable* shared_table) {
  if (!(tol > 0L)) throw std::invalid_argument("tol must be > 0");
  return evaluate_eta_b(s, cfg, &tol, -1, shared_table);
}

EvaluationResult eta(const Complex& s, const SeriesConfig& cfg, const Real& tol) {
  SeriesConfig cfg2 = cfg;
  cfg2.b = 2;
  return eta_b(s, cfg2, tol);
}

Complex eta_b_partial(const Complex& s, const SeriesConfig& cfg, int m_last,
                      CoefficientTable* shared_table) {
  if (m_last < 0) throw std::invalid_argument("m_last must be >= 0");
  return evaluate_eta_b(s, cfg, nullptr, m_last, shared_table).value;
}

EvaluationResult zeta(const Complex& s, const SeriesConfig& cfg, const Real& tol) {
  const auto t0 = std::chrono::steady_clock::now();
  require_half_plane(s);
  const mpfr_prec_t p = cfg.ctx.mantissa_bits;
  if (s.im.is_zero() && s.re == 1L) throw PoleAtOne("zeta has its pole at s = 1");

  // The conversion factor 1 - b^{1-s} vanishes at s = 1 + 2 pi i k / log b;
  // switch base when it is smaller than this separation threshold.
  const Real threshold = pow2(-static_cast<long>(p / 4), p);
  const Complex one = Complex::one(p);

  auto try_base = [&](int b) -> std::optional<EvaluationResult> {
    const Complex factor = one - int_pow_complex(static_cast<unsigned long>(b), one - s, cfg.ctx);
    const Real factor_abs = abs(factor);
    if (!(factor_abs >= threshold)) return std::nullopt;
    SeriesConfig cfg2 = cfg;
    cfg2.b = b;
    // Ask eta_b for tol |factor| / 2 so the quotient still meets tol.
    EvaluationResult r = eta_b(s, cfg2, tol * factor_abs / 2L);
    r.value = r.value / factor;
    r.remainder_bound = r.remainder_bound / factor_abs;
    r.elapsed_seconds = seconds_since(t0);
    return r;
  };

  if (auto r = try_base(cfg.b)) return *r;
  for (int b : kCandidateBases) {
    if (b == cfg.b) continue;
    if (auto r = try_base(b)) return *r;
  }
  throw BaseExhausted("no candidate base separates 1 - b^{1-s} from zero");
}

}  // namespace zetablock
