#pragma once

#include "itcraft/certificate.hpp"
#include "itcraft/core.hpp"
#include "itcraft/transversal.hpp"

#include <optional>
#include <vector>

namespace itcraft {

struct Abc {
    bool a = false; // block-minimal with no IT
    bool b = false; // disjoint union of complete bipartite graphs
    bool c = false; // r-1 components

    bool all() const { return a && b && c; }
    friend bool operator==(const Abc&, const Abc&) = default;
};

/// Throws Error(BudgetExceeded) if block-minimality cannot be decided.
Abc check_abc(const PartitionedGraph& g, const SearchBudget& budget = {});

struct FeasiblePair {
    std::vector<Vertex> I; // ascending
    Transversal T;
};

struct ImcWitness {
    FeasiblePair pair;
    BlockIndex root = 0;
    BlockGraph block_graph;
    std::vector<std::size_t> growth; // |I| after each iteration
};

/// Grows a feasible pair from (empty, T0) rooted at block `root` until no
/// vertex can be added, then checks that the result is an induced matching
/// configuration. Every structural claim is checked at runtime and a failure
/// raises Error(InvariantViolated). Throws PreconditionFailed if G is not a
/// union of complete bipartite graphs with r-1 components, or if G - V_root
/// has no IT.
ImcWitness build_imc(const PartitionedGraph& g, BlockIndex root, const SearchBudget& budget = {});

/// A complete bipartite component with one side inside a given block.
struct SideInBlock {
    std::size_t component = 0;  // index into components(g)
    std::vector<Vertex> inside;  // the side contained in the block
    std::vector<Vertex> outside; // the other side
    std::size_t swaps = 0;
    std::vector<std::size_t> degree_trace; // block-graph degree of the block before each swap
};

/// Lowest-index component with a side inside block i, by direct scan.
std::optional<SideInBlock> scan_side_in_block(const PartitionedGraph& g, BlockIndex i);

/// Same question answered through an IMC rooted at block i and repeated
/// swaps that lower the block's degree in the block graph. Throws NotFound,
/// InvariantViolated or BudgetExceeded.
SideInBlock find_side_in_block(const PartitionedGraph& g, BlockIndex i, const SearchBudget& budget = {});

struct TwoBlockHit {
    std::size_t component = 0;
    BlockIndex i = 0; // block holding the component's A side
    BlockIndex j = 0; // block holding its B side

    friend bool operator==(const TwoBlockHit&, const TwoBlockHit&) = default;
};

/// First complete bipartite component whose two sides lie in two distinct
/// blocks. Linear scan.
std::optional<TwoBlockHit> find_two_block_component(const PartitionedGraph& g);

/// The same via find_side_in_block on every block plus pigeonhole.
std::optional<TwoBlockHit> find_two_block_component_imc(const PartitionedGraph& g, const SearchBudget& budget = {});

/// Peels off two-block components until two blocks remain and emits the joins
/// that rebuild G. The certificate's relabel maps replayed ids back to ids of
/// g. With `use_imc` each component is located through
/// find_two_block_component_imc instead of the scan. Throws
/// PreconditionFailed, InvariantViolated or BudgetExceeded.
Certificate decompose_to_certificate(const PartitionedGraph& g, const SearchBudget& budget = {}, bool use_imc = false);

} // namespace itcraft
