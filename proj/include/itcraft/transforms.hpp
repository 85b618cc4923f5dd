#pragma once

#include "itcraft/core.hpp"

#include <map>
#include <vector>

namespace itcraft {

/// Target host block for every vertex of the dissolved block.
using Distribution = std::map<Vertex, BlockIndex>;

struct EdgeDeletePlan {
    Vertex u = 0;
    Vertex v = 0;
    BlockIndex k = 0;
    std::vector<Edge> F;

    friend bool operator==(const EdgeDeletePlan&, const EdgeDeletePlan&) = default;
};

/// Which input keeps the low vertex ids in a join.
enum class JoinLayout { HostFirst, AddedFirst };

/// Disjoint union of `host` and `added` where block `s` of `added` is dissolved
/// and each of its vertices (keys of `dist`, in `added` ids) moves to the host
/// block `dist[v]`. With HostFirst the host keeps ids 0..n_host-1 and `added`
/// is shifted; AddedFirst is the reverse. If neither input has an IT neither
/// does the result.
///
/// Throws Error(InvalidDistribution) unless `dist` covers exactly the dissolved
/// block with targets in range.
PartitionedGraph join(const PartitionedGraph& host, const PartitionedGraph& added, BlockIndex s,
    const Distribution& dist, JoinLayout layout = JoinLayout::HostFirst);

/// Removes uv and adds F. Every F edge joins u or v to a vertex of V_k and every
/// vertex of V_k is covered. Throws EdgeAbsent or InvalidPlan.
PartitionedGraph edge_delete(const PartitionedGraph& g, const EdgeDeletePlan& plan);

/// Edge union with `extra`. Throws LoopEdge, or InvalidArgument for ids out of range.
PartitionedGraph add_edges(const PartitionedGraph& g, const std::vector<Edge>& extra);

/// Induced subgraph on the surviving vertices, renumbered in ascending order.
/// `old_ids` (optional) receives new id -> old id. Throws EmptiesBlock.
PartitionedGraph delete_vertices(const PartitionedGraph& g, const std::vector<Vertex>& doomed,
    std::vector<Vertex>* old_ids = nullptr);

/// Vertex v becomes v*m .. v*m+m-1 in the same block; every edge becomes K_{m,m}.
PartitionedGraph blow_up(const PartitionedGraph& g, std::size_t m);

/// Sum of |V_i| over I is at least n(|I|-1)+1 for every nonempty I.
bool check_block_sum_condition(const PartitionedGraph& g, std::size_t n);

} // namespace itcraft
