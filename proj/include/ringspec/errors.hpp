#pragma once

#include <stdexcept>
#include <string>

namespace ringspec {

/// Raised when an exhaustive computation would exceed its configured budget.
/// Budgets fail loudly instead of truncating silently.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringspec
