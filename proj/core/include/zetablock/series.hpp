#pragma once

#include "zetablock/bounds.hpp"

namespace zetablock {

struct SeriesConfig {
  int b = 2;
  int ell = 0;  // 0 = choose automatically
  PrecisionContext ctx;
  int max_terms = 10000;
};

/// The powers n^{-(s+m)} over one block b^{ell-1} <= n < b^ell, stepped in
/// m by multiplying with the stored reciprocals (no transcendental calls
/// after setup).
struct BlockState {
  std::vector<Complex> values;
  std::vector<Real> inv;
  int m = 0;
  long first = 0;  // b^{ell-1}
};

BlockState make_block_state(const Complex& s, int b, int ell, const PrecisionContext& ctx);
/// Compensated sum of the current powers.
Complex block_sum(const BlockState& block);
/// Advances every power from n^{-(s+m)} to n^{-(s+m+1)}.
void block_step(BlockState& block);

struct EvaluationResult {
  Complex value;
  Complex head;
  int terms_used = 0;  // highest coefficient index kept (plan M)
  Real remainder_bound;
  int b = 0;
  int ell = 0;
  double elapsed_seconds = 0.0;
};

/// Head part (1 - b^{1-s}) * sum_{0<n<b^{ell-1}} n^{-s}.
Complex head_sum(const Complex& s, const SeriesConfig& cfg);

/// Chooses the smallest ell whose planned tail ratio is <= 1/8, subject to
/// the block size cap (b-1) b^{ell-1} <= 4096; falls back to the smallest
/// achieved ratio when none qualifies.
TruncationPlan choose_plan(TailMajorant& majorant, const Real& tol, int max_terms);

/// Evaluates eta_b(s) with certified truncation: head sum plus the
/// coefficient-weighted alternating block series. A shared CoefficientTable
/// for the same (b, s, precision) may be passed in to reuse coefficients
/// across calls (table extension is single-writer).
EvaluationResult eta_b(const Complex& s, const SeriesConfig& cfg, const Real& tol,
                       CoefficientTable* shared_table = nullptr);

/// eta(s) = eta_2(s).
EvaluationResult eta(const Complex& s, const SeriesConfig& cfg, const Real& tol);

/// zeta(s) = eta_b(s) / (1 - b^{1-s}), switching to the next candidate base
/// when the factor is too close to one of its zeros. Throws PoleAtOne at
/// s = 1 and BaseExhausted when no candidate base separates the factor.
EvaluationResult zeta(const Complex& s, const SeriesConfig& cfg, const Real& tol);

/// Head plus the first m_last+1 series terms at cfg precision, no planning.
/// Verification path for tail-bound and partial-sum comparisons; requires
/// an explicit cfg.ell >= 2.
Complex eta_b_partial(const Complex& s, const SeriesConfig& cfg, int m_last,
                      CoefficientTable* shared_table = nullptr);

}  // namespace zetablock
