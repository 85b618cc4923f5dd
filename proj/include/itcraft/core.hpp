#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace itcraft {

using Vertex = std::int32_t;
using BlockIndex = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Orders the endpoints so that u < v.
Edge make_edge(Vertex a, Vertex b);

/// A simple undirected graph together with a partition of its vertex set into
/// nonempty blocks.
///
/// Vertices are the dense ids 0..n-1. Blocks are stored sorted internally and
/// ordered by their minimum member, so two graphs that are equal as
/// partitioned graphs have identical block indices. Use block_of() to locate a
/// block from one of its members instead of caching indices across
/// transformations.
class PartitionedGraph {
public:
    PartitionedGraph() = default;

    /// Throws Error(InvalidGraph) on loops, duplicate edges, out-of-range ids,
    /// empty blocks, overlapping blocks, or blocks that do not cover 0..n-1.
    /// Labels are either empty or one string per vertex ("" = unlabeled).
    PartitionedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::vector<Vertex>> blocks,
        std::vector<std::string> labels = {});

    std::size_t n() const noexcept { return adjacency_.size(); }
    std::size_t r() const noexcept { return blocks_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    const std::vector<Vertex>& block(BlockIndex b) const { return blocks_[static_cast<std::size_t>(b)]; }
    BlockIndex block_of(Vertex v) const { return block_of_[static_cast<std::size_t>(v)]; }
    const std::vector<BlockIndex>& block_index() const noexcept { return block_of_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(Vertex v) const;

    std::vector<std::size_t> block_sizes() const;

    friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<BlockIndex> block_of_;
};

/// A connected component. When it induces a complete bipartite graph the two
/// sides are recorded; `side_a` always holds the minimum vertex id. A single
/// vertex counts as complete bipartite with an empty `side_b`.
struct Component {
    std::vector<Vertex> vertices;
    bool complete_bipartite = false;
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;

    friend bool operator==(const Component&, const Component&) = default;
};

struct GraphStats {
    std::size_t max_degree = 0;
    std::size_t local_degree = 0;
    std::size_t multiplicity = 0;
    std::size_t component_count = 0;
    std::vector<std::size_t> block_sizes;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Contraction of G[I] by blocks.
struct BlockGraph {
    std::vector<BlockIndex> active;                 // S(I), ascending
    std::vector<std::vector<BlockIndex>> adjacency; // indexed by block, simple graph on S(I)
    std::vector<Vertex> covered;                    // U(I), ascending
    std::size_t crossing_edges = 0;                 // edges of G[I] between distinct blocks, with multiplicity
    std::size_t internal_edges = 0;                 // edges of G[I] inside a single block

    bool is_active(BlockIndex b) const;
    std::size_t degree(BlockIndex b) const;
    /// Tree on S(I) in the multigraph sense: connected, no contracted loops,
    /// exactly |S(I)| - 1 crossing edges. The empty block graph counts as a tree.
    bool is_tree() const;
};

std::vector<Component> components(const PartitionedGraph& g);
GraphStats stats(const PartitionedGraph& g);
bool is_cb_union(const PartitionedGraph& g);
bool is_star_free(const PartitionedGraph& g, std::size_t k);
BlockGraph block_graph(const PartitionedGraph& g, std::span<const Vertex> subset);
bool complement_connected(const PartitionedGraph& g);

/// Component id per vertex, numbered in the order components() returns them.
std::vector<std::size_t> component_ids(const PartitionedGraph& g);

/// Applies the vertex permutation `new_id` (old id -> new id).
PartitionedGraph relabel(const PartitionedGraph& g, std::span<const Vertex> new_id);

/// Copy of `g` whose labels are prefixed with `prefix` (unlabeled vertices get
/// their id as label body).
PartitionedGraph with_label_prefix(const PartitionedGraph& g, const std::string& prefix);

/// Induced subgraph on the vertices of the listed blocks, re-densified in
/// ascending id order. `old_ids` (optional) receives new id -> old id.
PartitionedGraph restrict_to_blocks(const PartitionedGraph& g, std::span<const BlockIndex> keep,
    std::vector<Vertex>* old_ids = nullptr);

} // namespace itcraft
