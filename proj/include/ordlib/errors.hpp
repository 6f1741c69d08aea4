#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlib {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or rewriting budget ran out. Callers can raise the budget and retry.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// No power z^k with |k| <= budget brackets the queried element.
class CofinalityBudgetExceeded : public ResourceLimitError {
 public:
  CofinalityBudgetExceeded(long long budget)
      : ResourceLimitError("floor search exceeded exponent budget " + std::to_string(budget) +
                           " (central element not cofinal, or budget too small)"),
        budget_(budget) {}
  long long budget() const noexcept { return budget_; }

 private:
  long long budget_;
};

/// Handle reduction grew a word beyond its length budget.
class LengthBudgetExceeded : public ResourceLimitError {
 public:
  LengthBudgetExceeded(std::size_t budget, std::size_t reached)
      : ResourceLimitError("handle reduction exceeded length budget " + std::to_string(budget) +
                           " (word reached " + std::to_string(reached) + " letters)"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class StrandMismatch : public Error {
 public:
  StrandMismatch(int a, int b)
      : Error("strand count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class InvalidBraid : public Error {
 public:
  using Error::Error;
};

class ZeroExponent : public Error {
 public:
  explicit ZeroExponent(std::size_t index)
      : Error("root certificate entry " + std::to_string(index) + " has a zero exponent"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InsufficientKnots : public Error {
 public:
  using Error::Error;
};

class BallExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ordlib
