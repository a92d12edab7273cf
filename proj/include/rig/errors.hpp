#pragma once

#include <stdexcept>

namespace rig {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileRangeError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct WorkBudgetError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct StateError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct EnumerationBudgetError : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

}  // namespace rig
