#pragma once

#include <stdexcept>
#include <string>

namespace zaremba {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input (q < 2, zero denominator, out-of-range numerator, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Factorization gave up within the configured effort budget.
/// Carries the cofactor that remained unfactored.
class FactorizationLimitError : public Error {
 public:
  FactorizationLimitError(const std::string& what, std::string cofactor)
      : Error(what), cofactor_(std::move(cofactor)) {}
  const std::string& cofactor() const { return cofactor_; }

 private:
  std::string cofactor_;
};

/// A continued fraction word violated a structural rule
/// (leading/trailing zero, empty word).
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a zero-free word but got an entry equal to 0.
class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

/// Fold multiplier b = 0 would make the target denominator vanish.
class InvalidMultiplierError : public Error {
 public:
  using Error::Error;
};

/// Fold seed must be canonical: last entry >= 2, or a single entry >= 2.
class NonCanonicalSeedError : public Error {
 public:
  using Error::Error;
};

/// find_seed called outside its guaranteed domain.
class PropositionInapplicableError : public Error {
 public:
  using Error::Error;
};

/// A search that is proven to succeed came up empty: implementation bug.
class InternalContradictionError : public Error {
 public:
  using Error::Error;
};

/// No hardcoded fraction for the requested denominator.
class NoTableEntryError : public Error {
 public:
  using Error::Error;
};

/// An intermediate bound check failed during certificate construction.
/// Must never fire; firing means a bug or a genuine counterexample.
class ConstructionInvariantError : public Error {
 public:
  using Error::Error;
};

/// Requested modulus exceeds the configured exhaustive-search limit.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace zaremba
