#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

struct InvalidGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotStronglyConnected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroStrategy : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSandpileForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotStable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotArithmetical : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrimitive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration would exceed its configured candidate budget.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, double needed, double budget)
        : std::runtime_error(what + ": needs " + std::to_string(static_cast<long double>(needed)) +
                             " candidates, budget " + std::to_string(static_cast<long double>(budget))),
          needed(needed), budget(budget) {}
    double needed;
    double budget;
};

}  // namespace chipfire
