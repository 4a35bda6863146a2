#include "zaremba/folding.hpp"

namespace zaremba {
namespace {

// [.., 1, 1] and [.., 2] are the same value; keep the shorter tail so chain
// outputs stay canonical.
void rewrite_ones_tail(ContinuedFraction& w) {
  auto& q = w.quotients;
  if (q.size() >= 2 && q[q.size() - 1] == 1 && q[q.size() - 2] == 1) {
    q.pop_back();
    q.back() = 2;
  }
}

void require_canonical_seed(const ContinuedFraction& seed) {
  if (seed.quotients.empty()) throw InvalidWordError("empty fold seed");
  for (const Natural& a : seed.quotients)
    if (a == 0) throw NonCanonicalSeedError("fold seed contains a zero entry");
  if (seed.quotients.back() < 2)
    throw NonCanonicalSeedError(
        "fold seed must be canonical (last entry >= 2); got last entry " +
        seed.quotients.back().str());
}

}  // namespace

FoldResult fold_representation(const ContinuedFraction& rep, const Natural& b) {
  if (b < 1)
    throw InvalidMultiplierError("fold multiplier must be >= 1; b = 0 would "
                                 "make the denominator vanish");
  if (rep.quotients.empty()) throw InvalidWordError("empty fold seed");
  const std::size_t r = rep.length();
  if (r == 1 && rep.quotients[0] == 1)
    throw InvalidWordError("[1] has value 1 and cannot be folded");

  Rational seed_value = evaluate(rep);

  ContinuedFraction raw;
  raw.quotients.reserve(2 * r + 2);
  raw.quotients = rep.quotients;
  raw.quotients.push_back(b - 1);
  raw.quotients.emplace_back(1);
  raw.quotients.push_back(rep.quotients[r - 1] - 1);
  for (std::size_t i = r - 1; i-- > 0;) raw.quotients.push_back(rep.quotients[i]);

  ContinuedFraction word = normalize(raw);
  rewrite_ones_tail(word);

  const int sign = (r % 2 == 0) ? 1 : -1;
  Natural den = b * seed_value.den * seed_value.den;
  Natural num = seed_value.num * seed_value.den * b + sign;
  if (gcd(num, den) != 1)
    throw InternalContradictionError("folded fraction " + num.str() + "/" +
                                     den.str() + " is not reduced");
  Rational value{num, den};

  if (evaluate(word) != value)
    throw InternalContradictionError("folded word does not evaluate to the "
                                     "folded value");
  return FoldResult{std::move(word), std::move(value), b};
}

FoldResult fold(const ContinuedFraction& seed, const Natural& b) {
  if (b < 1)
    throw InvalidMultiplierError("fold multiplier must be >= 1; b = 0 would "
                                 "make the denominator vanish");
  require_canonical_seed(seed);
  FoldResult result = fold_representation(seed, b);

  if (b == 1) {
    // The generic zero collapse must agree with the closed form
    // [a_1, .., a_{r-1}, a_r + 1, a_r - 1, a_{r-1}, .., a_1].
    const auto& s = seed.quotients;
    ContinuedFraction closed;
    closed.quotients.assign(s.begin(), s.end() - 1);
    closed.quotients.push_back(s.back() + 1);
    closed.quotients.push_back(s.back() - 1);
    for (std::size_t i = s.size() - 1; i-- > 0;) closed.quotients.push_back(s[i]);
    rewrite_ones_tail(closed);
    if (closed != result.word)
      throw InternalContradictionError("b = 1 fold disagrees with its closed form");
  }
  return result;
}

FoldChainResult fold_chain(const ContinuedFraction& seed,
                           const std::vector<Natural>& multipliers) {
  require_canonical_seed(seed);
  if (seed.quotients.size() >= 2 && seed.quotients.front() < 2)
    throw NonCanonicalSeedError("chain seed must start with an entry >= 2");
  FoldChainResult out;
  out.word = seed;
  out.value = evaluate(seed);
  out.steps.reserve(multipliers.size());
  for (const Natural& b : multipliers) {
    if (!is_canonical(out.word)) out.word = alternate_rep(out.word);
    FoldResult step = fold(out.word, b);
    out.word = std::move(step.word);
    out.value = std::move(step.value);
    out.steps.push_back(
        {b, out.value.den, partial_quotient_max(out.word)});
  }
  return out;
}

}  // namespace zaremba
