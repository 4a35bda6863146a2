#include "zaremba/arithmetic.hpp"

#include <boost/multiprecision/integer.hpp>
#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>

namespace zaremba {
namespace {

namespace mp = boost::multiprecision;

constexpr std::uint64_t kSieveBound = 1'000'000;

// Primes up to kSieveBound, built once. Function-local static keeps the
// initialization thread-safe.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kSieveBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Bases that make Miller-Rabin exact for every n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kMrBases = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMrBases) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime_big(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(n.convert_to<std::uint64_t>());
  if (n % 2 == 0) return false;
  Natural d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMrBases) {
    Natural x = mp::powm(Natural(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho. Deterministic: x0 = 2 and the
// increment c step through a fixed sequence. Returns a nontrivial factor of
// composite odd n, or 0 once the iteration budget runs dry.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t& budget) {
  for (std::uint64_t c = 1; c < 64; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t power = 1, lam = 0;
    while (d == 1) {
      if (budget == 0) return 0;
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = mulmod_u64(y, y, n);
      y = (y + c) % n;
      ++lam;
      --budget;
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
  return 0;
}

Natural rho_big(const Natural& n, std::uint64_t& budget) {
  for (std::uint64_t c = 1; c < 64; ++c) {
    Natural x = 2, y = 2, d = 1;
    std::uint64_t power = 1, lam = 0;
    while (d == 1) {
      if (budget == 0) return 0;
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = (y * y + c) % n;
      ++lam;
      --budget;
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
  return 0;
}

void factor_u64_into(std::uint64_t n, std::uint64_t trial_bound,
                     std::uint64_t& budget, std::map<Natural, unsigned>& out) {
  for (std::uint32_t p : small_primes()) {
    if (p > trial_bound) break;
    if (static_cast<std::uint64_t>(p) * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++out[Natural(p)];
    }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[Natural(n)];
    return;
  }
  std::uint64_t f = rho_u64(n, budget);
  if (f == 0)
    throw FactorizationLimitError(
        "factorization effort exhausted; unfactored cofactor " + std::to_string(n),
        std::to_string(n));
  factor_u64_into(f, trial_bound, budget, out);
  factor_u64_into(n / f, trial_bound, budget, out);
}

void factor_big_into(Natural n, std::uint64_t trial_bound, std::uint64_t& budget,
                     std::map<Natural, unsigned>& out) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    factor_u64_into(n.convert_to<std::uint64_t>(), trial_bound, budget, out);
    return;
  }
  for (std::uint32_t p : small_primes()) {
    if (p > trial_bound) break;
    while (n % p == 0) {
      n /= p;
      ++out[Natural(p)];
    }
    if (n == 1) return;
  }
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    factor_u64_into(n.convert_to<std::uint64_t>(), 1, budget, out);
    return;
  }
  if (is_prime_big(n)) {
    ++out[n];
    return;
  }
  Natural f = rho_big(n, budget);
  if (f == 0)
    throw FactorizationLimitError(
        "factorization effort exhausted; unfactored cofactor " + n.str(), n.str());
  factor_big_into(f, trial_bound, budget, out);
  factor_big_into(n / f, trial_bound, budget, out);
}

}  // namespace

Natural gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0)
    throw InvalidInputError("gcd(0, 0) is undefined");
  return mp::gcd(a, b);
}

Natural Factorization::reconstruct() const {
  Natural n = 1;
  for (const auto& [p, e] : factors) n *= mp::pow(p, e);
  return n;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const Entry& e) { return e.exponent == 1; });
}

bool is_prime(const Natural& n) { return is_prime_big(n); }

Factorization factorize(const Natural& n, const FactorizeOptions& opts) {
  if (n < 2) throw InvalidInputError("factorize requires n >= 2, got " + n.str());
  std::uint64_t budget = opts.rho_iteration_limit;
  std::uint64_t trial_bound = std::min(opts.trial_division_bound, kSieveBound);
  std::map<Natural, unsigned> acc;
  factor_big_into(n, trial_bound, budget, acc);
  Factorization f;
  f.factors.reserve(acc.size());
  for (const auto& [p, e] : acc) f.factors.push_back({p, e});
  return f;
}

Natural radical(const Factorization& f) {
  Natural r = 1;
  for (const auto& [p, e] : f.factors) r *= p;
  return r;
}

Natural euler_phi(const Factorization& f) {
  Natural phi = 1;
  for (const auto& [p, e] : f.factors) phi *= mp::pow(p, e - 1) * (p - 1);
  return phi;
}

DecompositionChain decompose_chain(const Natural& q, const Factorization& f) {
  if (q < 2) throw InvalidInputError("decompose_chain requires q >= 2");
  DecompositionChain chain;
  chain.q0 = q;
  std::vector<unsigned> exps;
  exps.reserve(f.factors.size());
  for (const auto& [p, e] : f.factors) exps.push_back(e);

  while (true) {
    Natural p_level = 1, q_level = 1;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] & 1u) p_level *= f.factors[j].prime;
      exps[j] >>= 1;
      if (exps[j] > 0) q_level *= mp::pow(f.factors[j].prime, exps[j]);
    }
    chain.levels.push_back({p_level, q_level});
    if (q_level == 1) break;
  }
  chain.n_index = static_cast<unsigned>(chain.levels.size()) - 1;
  return chain;
}

DecompositionChain decompose_chain(const Natural& q, const FactorizeOptions& opts) {
  if (q < 2) throw InvalidInputError("decompose_chain requires q >= 2");
  return decompose_chain(q, factorize(q, opts));
}

std::vector<Natural> small_divisors(const Natural& d, const Natural& bound,
                                    const FactorizeOptions& opts) {
  if (d < 1) throw InvalidInputError("small_divisors requires d >= 1");
  if (d == 1) return {Natural(1)};
  Factorization f = factorize(d, opts);
  if (!f.is_squarefree())
    throw InvalidInputError("small_divisors requires square-free d, got " + d.str());
  std::vector<Natural> divisors{Natural(1)};
  for (const auto& [p, e] : f.factors) {
    std::size_t count = divisors.size();
    for (std::size_t i = 0; i < count; ++i) {
      Natural m = divisors[i] * p;
      if (m <= bound) divisors.push_back(std::move(m));
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace zaremba
