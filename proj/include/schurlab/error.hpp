#pragma once

#include <stdexcept>
#include <string>

namespace schurlab {

/// Invalid arguments or malformed input.
class Error : public std::invalid_argument {
 public:
  explicit Error(const std::string& what) : std::invalid_argument(what) {}
};

/// A search space larger than the configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schurlab
