#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace itcraft {

enum class ErrorCode {
    InvalidGraph,
    InvalidDistribution,
    InvalidPlan,
    EdgeAbsent,
    LoopEdge,
    EmptiesBlock,
    BadLength,
    NotPowerOfTwo,
    NotDivisible,
    ConditionFails,
    SeedHasIT,
    InvalidConstraint,
    BudgetExceeded,
    Malformed,
    BaseHasIT,
    BaseBudgetExceeded,
    StepPreconditionFailed,
    PreconditionFailed,
    InvariantViolated,
    NotFound,
    NotCoverGraph,
    Invalid,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every fallible library operation throws this. `step` is set when the error
// is attributable to one step of a certificate replay.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> step = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> step() const noexcept { return step_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> step_;
};

} // namespace itcraft
