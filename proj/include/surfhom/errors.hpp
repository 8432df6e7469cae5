#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfhom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// group construction
struct InvalidPermutation : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct GroupSpecError : Error { using Error::Error; };

// character tables
struct PrimeSearchFailed : Error { using Error::Error; };
struct LiftInconsistent : Error { using Error::Error; };
struct NonIndicatorValue : Error { using Error::Error; };
struct NonIntegerIndicator : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };

// word DSL
struct SyntaxError : Error {
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};
struct UnknownGenerator : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };

// class functions & counting
struct GroupMismatch : Error { using Error::Error; };
struct GenericShape : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct NotSymmetricGroup : Error { using Error::Error; };

// CLI class naming
struct AmbiguousClassName : Error { using Error::Error; };
struct UnknownClassName : Error { using Error::Error; };

}  // namespace surfhom
