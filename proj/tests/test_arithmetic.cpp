#include <doctest.h>

#include <numeric>

#include "zaremba/arithmetic.hpp"

using namespace zaremba;

namespace {

Factorization fz(const Natural& n) { return factorize(n); }

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(9, 20) == 1);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 7) == 7);
  CHECK(gcd(1, 1) == 1);
  CHECK(gcd(0, 5) == 5);
  for (unsigned q = 1; q <= 50; ++q) CHECK(gcd(q, q) == q);
  CHECK_THROWS_AS(gcd(0, 0), InvalidInputError);
}

TEST_CASE("factorize known values") {
  Factorization f360 = fz(360);
  REQUIRE(f360.factors.size() == 3);
  CHECK(f360.factors[0].prime == 2);
  CHECK(f360.factors[0].exponent == 3);
  CHECK(f360.factors[1].prime == 3);
  CHECK(f360.factors[1].exponent == 2);
  CHECK(f360.factors[2].prime == 5);
  CHECK(f360.factors[2].exponent == 1);

  Factorization f54 = fz(54);
  REQUIRE(f54.factors.size() == 2);
  CHECK(f54.factors[0].prime == 2);
  CHECK(f54.factors[0].exponent == 1);
  CHECK(f54.factors[1].prime == 3);
  CHECK(f54.factors[1].exponent == 3);

  for (unsigned p : {2u, 3u, 5u, 97u, 104729u}) {
    Factorization fp = fz(p);
    REQUIRE(fp.factors.size() == 1);
    CHECK(fp.factors[0].prime == p);
    CHECK(fp.factors[0].exponent == 1);
  }

  CHECK_THROWS_AS(fz(1), InvalidInputError);
  CHECK_THROWS_AS(fz(0), InvalidInputError);
}

TEST_CASE("factorize reconstruction and primality of listed primes") {
  for (unsigned n = 2; n <= 5000; ++n) {
    Factorization f = fz(n);
    CHECK(f.reconstruct() == n);
    Natural prev = 1;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);
      prev = p;
      CHECK(e >= 1);
      CHECK(is_prime(p));
    }
  }
  // beyond the trial division range: a product of two primes > 10^6
  Natural big = Natural(1000003) * Natural(1000033);
  Factorization f = factorize(big);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 1000003);
  CHECK(f.factors[1].prime == 1000033);
}

TEST_CASE("factorization effort cap reports the stuck cofactor") {
  FactorizeOptions starved;
  starved.trial_division_bound = 10;
  starved.rho_iteration_limit = 2;
  Natural hard = Natural("1000000007") * Natural("1000000009");
  try {
    factorize(hard, starved);
    FAIL("expected FactorizationLimitError");
  } catch (const FactorizationLimitError& e) {
    CHECK(e.cofactor() == hard.str());
  }
}

TEST_CASE("radical") {
  CHECK(radical(fz(360)) == 30);
  CHECK(radical(fz(12)) == 6);
  CHECK(radical(fz(97)) == 97);
  CHECK(radical(fz(1024)) == 2);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(fz(5)) == 4);
  CHECK(euler_phi(fz(6)) == 2);
  CHECK(euler_phi(fz(10)) == 4);
  CHECK(euler_phi(fz(36)) == 12);
}

TEST_CASE("phi >= 4 for square-free q >= 5 except 6") {
  for (unsigned q = 5; q <= 100000; ++q) {
    Factorization f = fz(q);
    if (!f.is_squarefree()) continue;
    if (q == 6) {
      CHECK(euler_phi(f) == 2);
      continue;
    }
    CHECK(euler_phi(f) >= 4);
  }
}

TEST_CASE("decompose_chain worked examples") {
  DecompositionChain c360 = decompose_chain(Natural(360));
  CHECK(c360.n_index == 1);
  REQUIRE(c360.levels.size() == 2);
  CHECK(c360.levels[0] == DecompositionChain::Level{10, 6});
  CHECK(c360.levels[1] == DecompositionChain::Level{6, 1});
  CHECK(c360.bottom() == 6);

  DecompositionChain c48 = decompose_chain(Natural(48));
  CHECK(c48.n_index == 2);
  REQUIRE(c48.levels.size() == 3);
  CHECK(c48.levels[0] == DecompositionChain::Level{3, 4});
  CHECK(c48.levels[1] == DecompositionChain::Level{1, 2});
  CHECK(c48.levels[2] == DecompositionChain::Level{2, 1});
  CHECK(c48.bottom() == 2);

  // any square-free q: the single level (q, 1)
  for (unsigned q : {2u, 3u, 6u, 30u, 105u, 4097u}) {
    if (!fz(q).is_squarefree()) continue;
    DecompositionChain c = decompose_chain(Natural(q));
    CHECK(c.n_index == 0);
    REQUIRE(c.levels.size() == 1);
    CHECK(c.levels[0] == DecompositionChain::Level{q, 1});
  }
  CHECK_THROWS_AS(decompose_chain(Natural(1)), InvalidInputError);
}

TEST_CASE("chain soundness sweep") {
  // q_(i-1) = p_(i) * q_(i)^2 at every level, p_(i) | rad(q), square-free
  // bottom, and N = 0 exactly for square-free q.
  unsigned long long violations = 0;
  for (unsigned q = 2; q <= 1000000; ++q) {
    Factorization f = fz(q);
    DecompositionChain chain = decompose_chain(Natural(q), f);
    Natural rad = radical(f);
    Natural above = q;
    bool ok = true;
    for (const auto& [p, q_level] : chain.levels) {
      ok = ok && above == p * q_level * q_level && rad % p == 0;
      above = q_level;
    }
    ok = ok && above == 1 && chain.q_at(chain.n_index) > 1 &&
         factorize(chain.bottom()).is_squarefree() &&
         (chain.n_index == 0) == f.is_squarefree();
    if (!ok) {
      ++violations;
      CAPTURE(q);
      CHECK(ok);
    }
  }
  REQUIRE(violations == 0);
}

TEST_CASE("small_divisors") {
  auto naturals = [](std::initializer_list<unsigned> xs) {
    std::vector<Natural> v;
    for (unsigned x : xs) v.emplace_back(x);
    return v;
  };
  CHECK(small_divisors(30, 7) == naturals({1, 2, 3, 5, 6}));
  CHECK(small_divisors(30, 1) == naturals({1}));
  CHECK(small_divisors(105, 1) == naturals({1}));
  CHECK(small_divisors(6, 6) == naturals({1, 2, 3, 6}));
  CHECK(small_divisors(1, 100) == naturals({1}));
  CHECK_THROWS_AS(small_divisors(12, 5), InvalidInputError);
}
