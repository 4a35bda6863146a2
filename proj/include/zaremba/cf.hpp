#pragma once

#include <vector>

#include "zaremba/arithmetic.hpp"

namespace zaremba {

/// A reduced fraction in (0, 1): gcd(num, den) = 1 and 0 < num < den.
struct Rational {
  Natural num;
  Natural den;

  /// Reduces n/d and validates the open-interval invariant.
  static Rational reduced(Natural n, Natural d);

  bool operator==(const Rational&) const = default;
};

/// A finite word of partial quotients a_1, ..., a_r for the fraction
/// 1/(a_1 + 1/(a_2 + ...)). Entries are >= 1 once normalized; a canonical
/// word additionally has last entry >= 2 (or length 1).
struct ContinuedFraction {
  std::vector<Natural> quotients;

  std::size_t length() const { return quotients.size(); }
  bool operator==(const ContinuedFraction&) const = default;
};

/// Canonical expansion of x by the Euclidean algorithm. The last quotient
/// comes out >= 2 automatically (single-entry words excepted).
ContinuedFraction expand(const Rational& x);

/// Value of a zero-free word. Throws NotNormalizedError on a 0 entry.
Rational evaluate(const ContinuedFraction& w);

/// The other expansion of the same value:
/// [..., a_r] <-> [..., a_r - 1, 1] for a_r >= 2, and the reverse merge when
/// the word ends in 1. Applying it twice is the identity.
ContinuedFraction alternate_rep(const ContinuedFraction& w);

/// Removes interior zeros by the rule [..., x, 0, y, ...] = [..., x+y, ...].
/// Leading or trailing zeros are rejected. Idempotent.
ContinuedFraction normalize(const ContinuedFraction& w);

/// K of the word: its maximum partial quotient.
Natural partial_quotient_max(const ContinuedFraction& w);

/// Continuant <a_1, ..., a_n>: the denominator of [a_1, ..., a_n].
/// Symmetric under reversal of the word.
Natural continuant(const std::vector<Natural>& entries);

/// Complement word for x -> 1 - x: [1, a_2, ...] <-> [a_2 + 1, ...] and
/// [a_1, ...] <-> [1, a_1 - 1, ...]. Preserves the denominator.
ContinuedFraction mirror(const ContinuedFraction& w);

/// The word read backwards. By continuant symmetry the value keeps its
/// denominator; the numerator changes.
ContinuedFraction reversed(const ContinuedFraction& w);

/// True when the word is zero-free with last entry >= 2, or has length 1.
bool is_canonical(const ContinuedFraction& w);

}  // namespace zaremba
