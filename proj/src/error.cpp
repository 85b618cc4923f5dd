#include "itcraft/error.hpp"

namespace itcraft {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::EmptiesBlock: return "EmptiesBlock";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ConditionFails: return "ConditionFails";
    case ErrorCode::SeedHasIT: return "SeedHasIT";
    case ErrorCode::InvalidConstraint: return "InvalidConstraint";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::BaseHasIT: return "BaseHasIT";
    case ErrorCode::BaseBudgetExceeded: return "BaseBudgetExceeded";
    case ErrorCode::StepPreconditionFailed: return "StepPreconditionFailed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotCoverGraph: return "NotCoverGraph";
    case ErrorCode::Invalid: return "Invalid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> step) :
    std::runtime_error(message), code_(code), step_(step)
{
}

} // namespace itcraft
