#pragma once

#include <string>
#include <vector>

#include "zaremba/folding.hpp"

namespace zaremba {

enum class Method {
  squarefree_direct,  // N = 0: (q-1)/q = [1, q-2, 1]
  case1,              // bottom q_(N) not in {2,3,6}: proposition seed + folds
  case2,              // bottom in {2,3,6}, rad(q) >= 10: [q_(N)] seed + folds
  table_2a3b,         // q = 2^n 3^m: hardcoded fraction tables + folds
  pow23_fallback,     // q = 2^n or 3^n: bounded fold/mirror search, K <= 3
};

std::string method_name(Method m);

enum class TraceOp {
  seed,            // initial fraction, nothing folded yet
  fold,            // fold of the canonical representation
  fold_alternate,  // fold of the other representation (pow23 search only)
  mirror,          // numerator complement a -> q - a (pow23 search only)
  reverse,         // word reversal, same denominator (pow23 search only)
};

std::string trace_op_name(TraceOp op);

struct TraceStep {
  TraceOp op;
  std::string description;
  Natural multiplier;   // fold multiplier b; 0 when not a fold
  Natural denominator;  // denominator after this step
  bool operator==(const TraceStep&) const = default;
};

/// The verifiable output: a numerator, an explicit expansion witnessing the
/// bound, and the construction trace that produced it. The stored word may be
/// non-canonical (the bound is witnessed by a specific expansion).
struct Certificate {
  Natural q;
  Natural a;
  ContinuedFraction word;
  Natural achieved_k;
  Natural claimed_bound;
  Method method = Method::squarefree_direct;
  std::vector<TraceStep> trace;
};

/// A fraction a/q with expansion of length >= 2, first and last quotient
/// >= 2, and K <= (q-1)/2. Exists for every q with phi(q) >= 4.
struct SeedFraction {
  Natural q_seed;
  Natural a_seed;
  ContinuedFraction word;
};

/// Smallest numerator realizing the proposition's seed properties.
SeedFraction find_seed(const Natural& q, const FactorizeOptions& opts = {});

struct TableEntry {
  Natural a;
  ContinuedFraction word;
};

/// Hardcoded fractions for the denominators p*q_(N)^2 with q_(N) in {2,3,6}
/// and, for the 1/4 branch, p*16: {4,8,12,24, 9,18,27,54, 36,72,108,216}
/// and {16,32,48,96}.
TableEntry table_seed(const Natural& q_level);

/// Builds a certificate for any q >= 2: K(a/q) <= rad(q) - 1 whenever q is
/// not a pure power of 2 or 3 (with K <= 5 when q = 2^n 3^m), and K <= 3 for
/// the pure powers.
Certificate construct(const Natural& q, const FactorizeOptions& opts = {});

/// Pure powers of 2 and 3. Deterministic bounded search over folds of either
/// representation plus numerator mirroring, one denominator level at a time;
/// every kept word has maximum quotient <= 3.
Certificate construct_pow23(const Natural& q, const FactorizeOptions& opts = {});

struct VerificationResult {
  bool ok = false;
  std::vector<std::string> reasons;
};

/// Recomputes every certificate invariant from scratch: coprimality, word
/// value, achieved maximum, bound, and bound/method consistency.
VerificationResult verify_certificate(const Certificate& c,
                                      const FactorizeOptions& opts = {});

/// Re-executes the certificate's trace and checks it reproduces the word and
/// numerator bit for bit.
bool replay_certificate(const Certificate& c, const FactorizeOptions& opts = {});

}  // namespace zaremba
