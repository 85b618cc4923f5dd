#pragma once

#include "itcraft/certificate.hpp"
#include "itcraft/transversal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace itcraft {

struct StepReport {
    std::size_t index = 0;
    std::string kind;
    std::size_t n = 0; // state size after the step
    std::size_t r = 0;
    std::uint64_t base_nodes = 0; // search nodes spent on a base or join payload
    bool cached = false;          // payload already verified earlier in this replay
};

struct VerifyReport {
    PartitionedGraph graph; // replayed graph, relabel applied
    std::vector<StepReport> steps;
    std::size_t payload_checks = 0;
};

/// Default budget for exhaustive checks of base and join payloads.
inline SearchBudget default_base_budget() { return SearchBudget{10'000'000, std::nullopt}; }

/// Replays `cert`, checking every payload exhaustively for having no IT and
/// every step's preconditions. On success the returned graph has no IT.
///
/// Throws Error with code Malformed, BaseHasIT, BaseBudgetExceeded or
/// StepPreconditionFailed; the last three carry the step index.
VerifyReport verify_certificate(const Certificate& cert, const SearchBudget& base_budget = default_base_budget());

/// Verifies `cert` and compares the result with `target` byte for byte in
/// canonical form (labels included).
bool certifies(const Certificate& cert, const PartitionedGraph& target,
    const SearchBudget& base_budget = default_base_budget());

struct CrossReport {
    bool agree = false;
    std::optional<Transversal> counterexample;
    std::uint64_t nodes = 0;
};

/// Verifies `cert`, then runs find_it on the result. Throws
/// Error(BudgetExceeded) if the search cannot finish.
CrossReport cross_validate(const Certificate& cert, const SearchBudget& budget = {},
    const SearchBudget& base_budget = default_base_budget());

} // namespace itcraft
