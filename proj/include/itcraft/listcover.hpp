#pragma once

#include "itcraft/core.hpp"
#include "itcraft/transversal.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace itcraft {

using Color = std::int64_t;

/// A graph H on 0..n-1 with a nonempty color list per vertex.
struct ListInstance {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Color>> lists;

    friend bool operator==(const ListInstance&, const ListInstance&) = default;
};

/// Throws Error(InvalidArgument) on loops, duplicate or out-of-range edges,
/// empty lists or a list count other than n. Also sorts and deduplicates.
ListInstance normalized(ListInstance inst);

/// Vertex (x, c) of the cover graph gets an id in x-major order with colors
/// ascending, so block x is the block of index x. Labels read "x/c".
PartitionedGraph cover_graph(const ListInstance& inst);

/// Id of (x, c) in cover_graph(inst); throws InvalidArgument if c is not in L(x).
Vertex cover_vertex(const ListInstance& inst, std::size_t x, Color c);

struct CoverConditions {
    bool a = false; // multiplicity 1
    bool b = false; // adjacency between two blocks agrees across components

    friend bool operator==(const CoverConditions&, const CoverConditions&) = default;
};

CoverConditions check_list_cover_conditions(const PartitionedGraph& g);

/// H lives on the blocks; colors are component indices. Throws NotCoverGraph
/// unless both conditions hold.
ListInstance recover_instance(const PartitionedGraph& g);

/// Reads off the coloring x -> c from a full transversal of cover_graph(inst).
/// Throws Error(Invalid) if t is not a full transversal or the coloring is not
/// proper.
std::vector<Color> it_to_coloring(const ListInstance& inst, const Transversal& t);

/// Max over (x, c) of the number of neighbours y of x with c in L(y).
std::size_t max_color_degree(const ListInstance& inst);

/// Isomorphism that maps block i to block i. Both graphs must have
/// multiplicity 1 (throws InvalidArgument otherwise); components are then
/// compared by their block sets and the block pairs carrying edges.
bool isomorphic_respecting_blocks(const PartitionedGraph& g, const PartitionedGraph& h);

/// {"version":1, "n":N, "edges":[[u,v],...], "lists":[[c,...],...]}
nlohmann::json instance_to_json(const ListInstance& inst);
ListInstance instance_from_json(const nlohmann::json& j);

} // namespace itcraft
