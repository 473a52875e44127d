#pragma once

#include <stdexcept>

namespace cubewalks {

// a computation would materialize data for 2^n vertices beyond the configured cap
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an enumeration would scan more states than the configured budget
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an exact division met a nonzero remainder
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxN = 12;
inline constexpr long long kDefaultBudget = 10'000'000;

}
