#include <doctest.h>

#include <numeric>
#include <random>

#include "zaremba/cf.hpp"

using namespace zaremba;

namespace {

ContinuedFraction word(std::initializer_list<unsigned long long> entries) {
  ContinuedFraction w;
  for (auto e : entries) w.quotients.emplace_back(e);
  return w;
}

Rational frac(unsigned long long n, unsigned long long d) {
  return Rational::reduced(Natural(n), Natural(d));
}

// Test-side oracle: the convergent recurrence applied verbatim, zero entries
// included. Stays independent of normalize/evaluate.
Rational eval_allowing_zeros(const std::vector<Natural>& entries) {
  Natural p_prev = 1, p_cur = 0, q_prev = 0, q_cur = 1;
  for (const Natural& a : entries) {
    Natural p_next = a * p_cur + p_prev;
    Natural q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
  }
  return Rational{p_cur, q_cur};
}

}  // namespace

TEST_CASE("Rational::reduced") {
  CHECK(frac(6, 8) == Rational{3, 4});
  CHECK_THROWS_AS(frac(5, 5), InvalidInputError);
  CHECK_THROWS_AS(frac(7, 5), InvalidInputError);
  CHECK_THROWS_AS(frac(0, 5), InvalidInputError);
  CHECK_THROWS_AS(frac(1, 0), InvalidInputError);
}

TEST_CASE("expand examples") {
  CHECK(expand(frac(5, 12)) == word({2, 2, 2}));
  CHECK(expand(frac(9, 20)) == word({2, 4, 2}));
  CHECK(expand(frac(1, 7)) == word({7}));
  CHECK(expand(frac(1, 2)) == word({2}));
  CHECK(expand(frac(17, 54)) == word({3, 5, 1, 2}));
}

TEST_CASE("evaluate examples and errors") {
  CHECK(evaluate(word({4, 2})) == frac(2, 9));
  CHECK(evaluate(word({3, 5, 1, 2})) == frac(17, 54));
  CHECK(evaluate(word({9})) == frac(1, 9));
  CHECK_THROWS_AS(evaluate(word({2, 0, 3})), NotNormalizedError);
  CHECK_THROWS_AS(evaluate(ContinuedFraction{}), InvalidWordError);
}

TEST_CASE("alternate_rep") {
  CHECK(alternate_rep(word({2, 2, 2})) == word({2, 2, 1, 1}));
  CHECK(alternate_rep(word({2, 2, 1, 1})) == word({2, 2, 2}));
  CHECK(alternate_rep(word({9})) == word({8, 1}));
  CHECK(alternate_rep(word({1, 4, 1})) == word({1, 5}));
  CHECK(evaluate(word({1, 4, 1})) == evaluate(word({1, 5})));
  CHECK_THROWS_AS(alternate_rep(word({1})), InvalidWordError);
}

TEST_CASE("normalize") {
  CHECK(normalize(word({2, 0, 3})) == word({5}));
  CHECK(normalize(word({4, 0, 1, 3})) == word({5, 3}));
  CHECK(normalize(word({2, 1, 1})) == word({2, 1, 1}));
  CHECK(normalize(word({3, 1, 0, 1, 0, 3})) == word({3, 5}));
  CHECK(normalize(word({1, 0, 0, 0, 1})) == word({2}));
  CHECK_THROWS_AS(normalize(word({0, 2})), InvalidWordError);
  CHECK_THROWS_AS(normalize(word({2, 0})), InvalidWordError);
}

TEST_CASE("normalize is idempotent and preserves value") {
  std::mt19937_64 rng(20240117);
  std::uniform_int_distribution<int> len_dist(3, 10);
  std::uniform_int_distribution<int> entry_dist(1, 6);
  std::uniform_real_distribution<double> zero_prob(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    ContinuedFraction w;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      bool interior = i > 0 && i + 1 < len;
      bool zero = interior && zero_prob(rng) < 0.3;
      w.quotients.emplace_back(zero ? 0 : entry_dist(rng));
    }
    ContinuedFraction n1 = normalize(w);
    CHECK(normalize(n1) == n1);
    CHECK(evaluate(n1) == eval_allowing_zeros(w.quotients));
  }
}

TEST_CASE("partial_quotient_max") {
  CHECK(partial_quotient_max(word({3, 5, 1, 2})) == 5);
  CHECK(partial_quotient_max(word({42})) == 42);
  CHECK(partial_quotient_max(word({2, 4, 2})) == 4);
}

TEST_CASE("continuant") {
  CHECK(continuant({Natural(2), Natural(2)}) == 5);
  CHECK(continuant({Natural(7)}) == 7);
  for (unsigned q = 3; q <= 99; q += 2)
    CHECK(continuant({Natural(2), Natural((q - 1) / 2)}) == q);
  // the continuant is the denominator of the word's value
  CHECK(continuant(word({3, 5, 1, 2}).quotients) == 54);
}

TEST_CASE("continuant symmetry (randomized)") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> len_dist(1, 12);
  std::uniform_int_distribution<int> entry_dist(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Natural> entries;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) entries.emplace_back(entry_dist(rng));
    std::vector<Natural> reversed(entries.rbegin(), entries.rend());
    CHECK(continuant(entries) == continuant(reversed));
  }
}

TEST_CASE("round trip and two-representation duality, exhaustive") {
  unsigned long long checked = 0, violations = 0;
  for (unsigned q = 2; q <= 3000; ++q) {
    for (unsigned a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      Rational x{a, q};
      ContinuedFraction w = expand(x);
      ContinuedFraction alt = alternate_rep(w);
      bool ok = is_canonical(w) && evaluate(w) == x && evaluate(alt) == x &&
                (w.length() % 2) != (alt.length() % 2) &&
                alternate_rep(alt) == w;
      if (!ok) {
        ++violations;
        CAPTURE(q);
        CAPTURE(a);
        CHECK(ok);
      }
      ++checked;
    }
  }
  CHECK(checked > 2700000);
  REQUIRE(violations == 0);
}

TEST_CASE("round trip, random large denominators") {
  std::mt19937_64 rng(5550123);
  std::uniform_int_distribution<unsigned long long> q_dist(3001, 10000);
  for (int trial = 0; trial < 100000; ++trial) {
    unsigned long long q = q_dist(rng);
    unsigned long long a =
        std::uniform_int_distribution<unsigned long long>(1, q - 1)(rng);
    unsigned long long g = std::gcd(a, q);
    a /= g;
    q /= g;
    if (q < 2) continue;
    Rational x{a, q};
    ContinuedFraction w = expand(x);
    CHECK(is_canonical(w));
    CHECK(evaluate(w) == x);
    CHECK(evaluate(alternate_rep(w)) == x);
  }
}

TEST_CASE("expand handles denominators beyond 64 bits") {
  Natural q("340282366920938463463374607431768211507");  // > 2^128
  Natural a = q - 1;
  Rational x{a, q};
  ContinuedFraction w = expand(x);
  CHECK(evaluate(w) == x);
  CHECK(w.length() > 1);
}

TEST_CASE("mirror complements the value") {
  CHECK(mirror(word({2})) == word({1, 1}));
  CHECK(mirror(word({1, 1})) == word({2}));
  CHECK(mirror(word({4, 2})) == word({1, 3, 2}));
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    unsigned long long q =
        std::uniform_int_distribution<unsigned long long>(3, 5000)(rng);
    unsigned long long a =
        std::uniform_int_distribution<unsigned long long>(1, q - 1)(rng);
    if (std::gcd(a, q) != 1) continue;
    ContinuedFraction w = expand(Rational{a, q});
    ContinuedFraction m = mirror(w);
    Rational mv = evaluate(m);
    CHECK(mv.den == q);
    CHECK(mv.num == q - a);
  }
}
