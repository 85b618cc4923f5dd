#pragma once

#include "itcraft/core.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace itcraft {

/// Partial map block -> vertex. Unassigned blocks hold kNoVertex.
class Transversal {
public:
    Transversal() = default;
    explicit Transversal(std::size_t r) : pick_(r, kNoVertex) {}

    std::size_t r() const noexcept { return pick_.size(); }
    Vertex at(BlockIndex b) const { return pick_[static_cast<std::size_t>(b)]; }
    bool assigned(BlockIndex b) const { return at(b) != kNoVertex; }
    void assign(BlockIndex b, Vertex v) { pick_[static_cast<std::size_t>(b)] = v; }
    void clear(BlockIndex b) { pick_[static_cast<std::size_t>(b)] = kNoVertex; }

    std::size_t size() const;
    bool is_full() const { return size() == r(); }
    /// Assigned vertices, ascending.
    std::vector<Vertex> vertices() const;
    const std::vector<Vertex>& picks() const noexcept { return pick_; }

    static Transversal from_vertices(const PartitionedGraph& g, std::span<const Vertex> vs);

    friend bool operator==(const Transversal&, const Transversal&) = default;

private:
    std::vector<Vertex> pick_;
};

/// Every assigned vertex lies in its block and no two assigned vertices are adjacent.
bool is_valid_partial(const PartitionedGraph& g, const Transversal& t);

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { Found, None, BudgetExceeded };

struct ItResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Transversal> transversal; // set iff Found
    std::uint64_t nodes = 0;
};

struct CountResult {
    std::optional<std::uint64_t> count; // empty iff the budget was hit
    std::uint64_t nodes = 0;
};

enum class Tri { False, True, BudgetExceeded };

/// Restrictions on the IT search: blocks that are left out of the instance and
/// vertices that may not be chosen.
struct SearchScope {
    std::vector<BlockIndex> excluded_blocks;
    std::vector<Vertex> forbidden_vertices;
};

/// Decides IT existence. None is an exhaustive proof; BudgetExceeded is not.
///
/// Backtracking over blocks with forward checking, smallest-domain-first block
/// choice (ties to the lowest index), ascending vertex order, a shortcut for
/// blocks owning a candidate with no live neighbours, and dynamic splitting of
/// the residual instance into independent parts whose failures are memoised.
ItResult find_it(const PartitionedGraph& g, const SearchBudget& budget = {}, const SearchScope& scope = {});

/// Exact number of ITs by plain enumeration. Meant for small instances.
CountResult count_its(const PartitionedGraph& g, const SearchBudget& budget = {});

/// No IT, and deleting any single block leaves a graph that has one.
Tri is_block_minimal(const PartitionedGraph& g, const SearchBudget& budget = {});

struct PartialItRequest {
    Transversal forced;                       // size 0 or r
    std::vector<Vertex> forbidden_vertices;
    std::optional<Vertex> minimize_degree_of;
};

/// A maximum-cardinality partial IT extending `forced` and avoiding the
/// forbidden vertices; among those, one with the fewest neighbours of
/// `minimize_degree_of`. Disjoint unions of complete bipartite graphs are
/// solved exactly by side enumeration plus bipartite matching; any other graph
/// goes through branch and bound under the budget.
///
/// Throws Error(InvalidConstraint) when `forced` is itself invalid and
/// Error(BudgetExceeded) when the budget runs out.
Transversal max_partial_it(const PartitionedGraph& g, const PartialItRequest& request, const SearchBudget& budget = {});

/// The branch and bound route regardless of graph shape. Exposed so the two
/// routes can be checked against each other.
Transversal max_partial_it_generic(const PartitionedGraph& g, const PartialItRequest& request,
    const SearchBudget& budget = {});

/// Number of vertices of `t` adjacent to w.
std::size_t degree_into(const PartitionedGraph& g, const Transversal& t, Vertex w);

} // namespace itcraft
