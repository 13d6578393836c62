#pragma once

#include <stdexcept>
#include <string>

namespace dsarr {

// Error taxonomy, mapped onto CLI exit codes:
//   InputError       -> 2  (bad files, failed preconditions, degenerate input)
//   VerificationError-> 3  (a structural claim the library checks did not hold)
//   BudgetError      -> 4  (a configured resource budget was exceeded)
// InternalError signals a broken invariant inside the library itself.

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dsarr
