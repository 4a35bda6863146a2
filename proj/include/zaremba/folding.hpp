#pragma once

#include <vector>

#include "zaremba/cf.hpp"

namespace zaremba {

/// Result of one fold: the normalized word, its exact value, and the
/// multiplier used. value.den = multiplier_b * (seed denominator)^2 and the
/// fraction is always reduced.
struct FoldResult {
  ContinuedFraction word;
  Rational value;
  Natural multiplier_b;
};

/// Applies the folding identity to exactly the representation given:
///   t/q + (-1)^r / (b q^2) = [a_1..a_r, b-1, 1, a_r - 1, a_{r-1}, .., a_1]
/// where r is the length of `rep`. Interior zeros are collapsed and a
/// trailing [.., 1, 1] tail is rewritten to [.., 2]. `rep` may be either
/// expansion of its value (entries >= 1); the sign follows its length.
FoldResult fold_representation(const ContinuedFraction& rep, const Natural& b);

/// The folding step on a canonical seed (last entry >= 2, or a single entry
/// >= 2). Callers that chain folds must also keep the first entry >= 2.
FoldResult fold(const ContinuedFraction& seed, const Natural& b);

struct FoldStep {
  Natural multiplier;
  Natural denominator;  // after this fold
  Natural max_quotient; // of the word after this fold
};

struct FoldChainResult {
  ContinuedFraction word;
  Rational value;
  std::vector<FoldStep> steps;
};

/// Left fold of `fold` over the multipliers, re-canonicalizing between steps
/// (a word ending in 1 is replaced by its canonical twin before the next
/// fold; this is how 1/2 -> 1/4 = [3,1] continues as [4]). An empty
/// multiplier list returns the seed unchanged.
FoldChainResult fold_chain(const ContinuedFraction& seed,
                           const std::vector<Natural>& multipliers);

}  // namespace zaremba
