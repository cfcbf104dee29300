#pragma once

#include <stdexcept>
#include <string>

namespace grl {

/// Thrown when a configuration document is malformed or inconsistent.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerical routine cannot produce a result (e.g. factorization failure).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive enumeration would exceed its size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grl
