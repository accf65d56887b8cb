#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace monocat {

// Malformed input: bad JSON, wrong shapes, non-prime modulus, relation violations.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural precondition of an operation does not hold (e.g. a map that
// should be injective is not).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

// A search ran out of budget or randomization without a verdict.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : InconclusiveError {
    using InconclusiveError::InconclusiveError;
};

// Process-wide wall-clock budget. Disabled unless set; long loops call check().
class Budget {
public:
    static void set_milliseconds(long long ms);
    static void clear();
    static void from_environment();
    static void check(const std::string& where);
    static bool active();
};

}  // namespace monocat
