#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "zaremba/errors.hpp"

namespace zaremba {

/// Arbitrary-precision nonnegative integer. All moduli accepted by the
/// toolkit are >= 2; intermediate arithmetic may use the full signed range.
using Natural = boost::multiprecision::cpp_int;

Natural gcd(const Natural& a, const Natural& b);

/// Effort knobs for factorize(). Trial division runs over primes up to
/// trial_division_bound, Pollard-Brent rho picks up composite cofactors
/// afterwards and gives up after rho_iteration_limit squarings.
struct FactorizeOptions {
  std::uint64_t trial_division_bound = 1'000'000;
  std::uint64_t rho_iteration_limit = 20'000'000;
};

/// Prime factorization n = p_1^e_1 * ... * p_k^e_k with p_1 < ... < p_k.
struct Factorization {
  struct Entry {
    Natural prime;
    unsigned exponent;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> factors;

  Natural reconstruct() const;
  bool is_squarefree() const;
  bool operator==(const Factorization&) const = default;
};

/// Deterministic Miller-Rabin over a fixed base set (exact for all inputs
/// below 3.3e24, which covers everything this toolkit sweeps).
bool is_prime(const Natural& n);

Factorization factorize(const Natural& n, const FactorizeOptions& opts = {});

/// Product of the distinct primes of the factored number.
Natural radical(const Factorization& f);

/// Euler totient of the factored number.
Natural euler_phi(const Factorization& f);

/// The iterated decomposition q_(i-1) = p_(i) * q_(i)^2 where p_(i) collects
/// the primes of odd exponent in q_(i-1). Terminates at the square-free
/// bottom q_(N) > 1 with q_(N+1) = 1; a square-free q is its own bottom
/// (N = 0, single level (q, 1)).
struct DecompositionChain {
  struct Level {
    Natural p_level;
    Natural q_level;
    bool operator==(const Level&) const = default;
  };
  Natural q0;
  std::vector<Level> levels;  // levels[i-1] holds (p_(i), q_(i)), i = 1..N+1
  unsigned n_index = 0;       // N

  /// q_(i) for i in [0, N+1].
  const Natural& q_at(unsigned i) const { return i == 0 ? q0 : levels[i - 1].q_level; }
  /// p_(i) for i in [1, N+1].
  const Natural& p_at(unsigned i) const { return levels[i - 1].p_level; }
  /// q_(N), the square-free bottom. Equals p_(N+1) by construction.
  const Natural& bottom() const { return levels.back().p_level; }

  bool operator==(const DecompositionChain&) const = default;
};

DecompositionChain decompose_chain(const Natural& q, const FactorizeOptions& opts = {});
DecompositionChain decompose_chain(const Natural& q, const Factorization& f);

/// All divisors m of square-free d with m <= bound, ascending. Contains 1.
std::vector<Natural> small_divisors(const Natural& d, const Natural& bound,
                                    const FactorizeOptions& opts = {});

}  // namespace zaremba
