#pragma once

#include <string>
#include <vector>

#include "zetablock/series.hpp"

namespace zetablock {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_seconds = 0.0;
};

struct CheckOptions {
  bool quick = false;       // subset grids so the suite finishes quickly
  unsigned long seed = 20260301;
  int digits = 30;
};

/// Runs the verification suite: ell-invariance, base-invariance, certified
/// error (tail containment and oracle agreement), coefficient oracle
/// agreement, bound sandwich, periodicity, w identities, equality case.
std::vector<CheckResult> run_selfchecks(const CheckOptions& options);

}  // namespace zetablock
