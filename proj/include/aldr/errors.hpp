#pragma once

#include <stdexcept>
#include <string>

namespace aldr {

// Weight-list validation failures.
struct EmptyWeightsError : std::invalid_argument {
  EmptyWeightsError() : std::invalid_argument("weight list is empty") {}
};

struct NonpositiveWeightError : std::invalid_argument {
  explicit NonpositiveWeightError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Inputs outside the fixed-width arithmetic regime (m or K too large).
struct OverflowRegimeError : std::overflow_error {
  explicit OverflowRegimeError(const std::string& what)
      : std::overflow_error(what) {}
};

// Amplification rule rejected (e.g. constant K below the base depth k).
struct InvalidRuleError : std::invalid_argument {
  explicit InvalidRuleError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A rational-vs-irrational comparison that the interval refinement loop
// could not settle before hitting the precision cap.
struct UndecidedError : std::runtime_error {
  explicit UndecidedError(const std::string& what)
      : std::runtime_error(what) {}
};

// multiplicative_order exceeded its iteration cap.
struct OrderCapError : std::runtime_error {
  explicit OrderCapError(const std::string& what)
      : std::runtime_error(what) {}
};

// Combinatorial guard tripped (unroll count, enumeration size, ...).
struct GuardError : std::invalid_argument {
  explicit GuardError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A bounded sampling call ran out of its flip budget.
struct FlipBudgetError : std::runtime_error {
  explicit FlipBudgetError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace aldr
