#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zaremba/construct.hpp"

namespace zaremba {

struct OracleOptions {
  /// Largest modulus the exhaustive search accepts.
  Natural limit = 1'000'000;
  /// Worker threads for scan_range; 0 picks the hardware count.
  unsigned threads = 1;
  FactorizeOptions factorize;
};

/// Exact minima of K over all numerators coprime to q, under both
/// conventions: the canonical expansion alone, and the better of the two
/// expansions of each fraction.
struct OracleReport {
  Natural q;
  Natural min_k_canonical;
  Natural min_k_best_rep;
  std::vector<Natural> minimizers_canonical;
  std::vector<Natural> minimizers_best_rep;
};

OracleReport min_k(const Natural& q, const OracleOptions& opts = {});

struct ScanRow {
  Natural q;
  Natural rad;
  Natural min_k_canonical;
  Natural constructed_k;
  Natural claimed_bound;
  std::optional<std::string> error;  // per-row failures are collected, not fatal
};

/// One row per q in [lo, hi], ascending, combining the oracle minimum with
/// the constructed certificate. Rows may be computed in parallel; assembly
/// order is fixed by q.
std::vector<ScanRow> scan_range(const Natural& lo, const Natural& hi,
                                const OracleOptions& opts = {});

}  // namespace zaremba
