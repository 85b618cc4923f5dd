#include "itcraft/core.hpp"

#include "itcraft/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace itcraft {

namespace {

    [[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidGraph, why); }

} // namespace

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

PartitionedGraph::PartitionedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::vector<Vertex>> blocks,
    std::vector<std::string> labels) :
    edges_(std::move(edges)), blocks_(std::move(blocks)), labels_(std::move(labels)), adjacency_(n), block_of_(n, -1)
{
    if (blocks_.empty())
        invalid("a partition needs at least one block");
    if (!labels_.empty() && labels_.size() != n)
        invalid("labels must be empty or one per vertex");
    if (std::all_of(labels_.begin(), labels_.end(), [](const std::string& s) { return s.empty(); }))
        labels_.clear();

    const auto in_range = [n](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < n; };

    for (auto& e : edges_) {
        if (!in_range(e.u) || !in_range(e.v))
            invalid("edge endpoint out of range");
        if (e.u == e.v)
            invalid("loop at vertex " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        invalid("duplicate edge");

    for (auto& blk : blocks_) {
        if (blk.empty())
            invalid("empty block");
        std::sort(blk.begin(), blk.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (Vertex v : blocks_[b]) {
            if (!in_range(v))
                invalid("block member out of range");
            auto& slot = block_of_[static_cast<std::size_t>(v)];
            if (slot != -1)
                invalid("vertex " + std::to_string(v) + " lies in two blocks");
            slot = static_cast<BlockIndex>(b);
        }
    if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end())
        invalid("blocks do not cover every vertex");

    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adjacency_)
        std::sort(nb.begin(), nb.end());
}

bool PartitionedGraph::adjacent(Vertex a, Vertex b) const
{
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::string PartitionedGraph::label(Vertex v) const
{
    return labels_.empty() ? std::string{} : labels_[static_cast<std::size_t>(v)];
}

std::vector<std::size_t> PartitionedGraph::block_sizes() const
{
    std::vector<std::size_t> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& blk : blocks_)
        sizes.push_back(blk.size());
    return sizes;
}

bool BlockGraph::is_active(BlockIndex b) const { return std::binary_search(active.begin(), active.end(), b); }

std::size_t BlockGraph::degree(BlockIndex b) const
{
    if (b < 0 || static_cast<std::size_t>(b) >= adjacency.size())
        return 0;
    return adjacency[static_cast<std::size_t>(b)].size();
}

bool BlockGraph::is_tree() const
{
    if (active.empty())
        return true;
    if (internal_edges != 0 || crossing_edges + 1 != active.size())
        return false;
    std::vector<char> seen(adjacency.size(), 0);
    std::vector<BlockIndex> stack{active.front()};
    seen[static_cast<std::size_t>(active.front())] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        ++reached;
        for (auto c : adjacency[static_cast<std::size_t>(b)])
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                stack.push_back(c);
            }
    }
    return reached == active.size();
}

std::vector<std::size_t> component_ids(const PartitionedGraph& g)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(g.n(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (id[s] != unset)
            continue;
        id[s] = next;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto u : g.neighbors(v))
                if (id[static_cast<std::size_t>(u)] == unset) {
                    id[static_cast<std::size_t>(u)] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return id;
}

std::vector<Component> components(const PartitionedGraph& g)
{
    std::vector<Component> out;
    std::vector<int> colour(g.n(), -1);
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (colour[s] != -1)
            continue;
        Component comp;
        bool bipartite = true;
        std::size_t edge_ends = 0;
        std::deque<Vertex> queue{static_cast<Vertex>(s)};
        colour[s] = 0;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            comp.vertices.push_back(v);
            (colour[static_cast<std::size_t>(v)] == 0 ? comp.side_a : comp.side_b).push_back(v);
            edge_ends += g.degree(v);
            for (auto u : g.neighbors(v)) {
                auto& cu = colour[static_cast<std::size_t>(u)];
                if (cu == -1) {
                    cu = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                }
                else if (cu == colour[static_cast<std::size_t>(v)])
                    bipartite = false;
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        std::sort(comp.side_a.begin(), comp.side_a.end());
        std::sort(comp.side_b.begin(), comp.side_b.end());
        comp.complete_bipartite = bipartite && edge_ends / 2 == comp.side_a.size() * comp.side_b.size();
        if (!comp.complete_bipartite) {
            comp.side_a.clear();
            comp.side_b.clear();
        }
        out.push_back(std::move(comp));
    }
    return out;
}

GraphStats stats(const PartitionedGraph& g)
{
    GraphStats st;
    st.block_sizes = g.block_sizes();

    std::vector<std::size_t> per_block(g.r(), 0);
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto vv = static_cast<Vertex>(v);
        st.max_degree = std::max(st.max_degree, g.degree(vv));
        for (auto u : g.neighbors(vv))
            if (g.block_of(u) != g.block_of(vv))
                st.local_degree = std::max(st.local_degree, ++per_block[static_cast<std::size_t>(g.block_of(u))]);
        for (auto u : g.neighbors(vv))
            per_block[static_cast<std::size_t>(g.block_of(u))] = 0;
    }

    const auto comps = components(g);
    st.component_count = comps.size();
    for (const auto& c : comps) {
        for (auto v : c.vertices)
            st.multiplicity = std::max(st.multiplicity, ++per_block[static_cast<std::size_t>(g.block_of(v))]);
        for (auto v : c.vertices)
            per_block[static_cast<std::size_t>(g.block_of(v))] = 0;
    }
    return st;
}

bool is_cb_union(const PartitionedGraph& g)
{
    const auto comps = components(g);
    return std::all_of(comps.begin(), comps.end(), [](const Component& c) { return c.complete_bipartite; });
}

bool is_star_free(const PartitionedGraph& g, std::size_t k)
{
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "star size must be at least 2");

    std::vector<Vertex> chosen;
    // Is there an independent k-subset of `pool` starting at position `from`?
    std::function<bool(const std::vector<Vertex>&, std::size_t)> extend = [&](const std::vector<Vertex>& pool,
                                                                              std::size_t from) {
        if (chosen.size() == k)
            return true;
        if (chosen.size() + (pool.size() - from) < k)
            return false;
        for (std::size_t i = from; i < pool.size(); ++i) {
            auto x = pool[i];
            if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, x); }))
                continue;
            chosen.push_back(x);
            if (extend(pool, i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(static_cast<Vertex>(v));
        if (nb.size() < k)
            continue;
        chosen.clear();
        if (extend(nb, 0))
            return false;
    }
    return true;
}

BlockGraph block_graph(const PartitionedGraph& g, std::span<const Vertex> subset)
{
    BlockGraph bg;
    bg.adjacency.resize(g.r());
    std::vector<char> in_subset(g.n(), 0);
    for (auto v : subset) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n())
            throw Error(ErrorCode::InvalidArgument, "vertex outside the graph");
        in_subset[static_cast<std::size_t>(v)] = 1;
        bg.active.push_back(g.block_of(v));
    }
    std::sort(bg.active.begin(), bg.active.end());
    bg.active.erase(std::unique(bg.active.begin(), bg.active.end()), bg.active.end());

    for (const auto& e : g.edges()) {
        if (!in_subset[static_cast<std::size_t>(e.u)] || !in_subset[static_cast<std::size_t>(e.v)])
            continue;
        auto bu = g.block_of(e.u), bv = g.block_of(e.v);
        if (bu == bv) {
            ++bg.internal_edges;
            continue;
        }
        ++bg.crossing_edges;
        bg.adjacency[static_cast<std::size_t>(bu)].push_back(bv);
        bg.adjacency[static_cast<std::size_t>(bv)].push_back(bu);
    }
    for (auto& nb : bg.adjacency) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (auto b : bg.active) {
        const auto& blk = g.block(b);
        bg.covered.insert(bg.covered.end(), blk.begin(), blk.end());
    }
    std::sort(bg.covered.begin(), bg.covered.end());
    return bg;
}

bool complement_connected(const PartitionedGraph& g)
{
    if (g.n() == 0)
        throw Error(ErrorCode::InvalidArgument, "complement connectivity needs at least one vertex");
    std::vector<Vertex> unvisited(g.n() - 1);
    std::iota(unvisited.begin(), unvisited.end(), 1);
    std::vector<Vertex> frontier{0};
    while (!frontier.empty() && !unvisited.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        std::vector<Vertex> keep;
        for (auto y : unvisited)
            (g.adjacent(x, y) ? keep : frontier).push_back(y);
        unvisited.swap(keep);
    }
    return unvisited.empty();
}

PartitionedGraph relabel(const PartitionedGraph& g, std::span<const Vertex> new_id)
{
    if (new_id.size() != g.n())
        throw Error(ErrorCode::InvalidArgument, "relabeling has the wrong length");
    std::vector<char> hit(g.n(), 0);
    for (auto v : new_id) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n() || hit[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::InvalidArgument, "relabeling is not a permutation");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    const auto map = [&](Vertex v) { return new_id[static_cast<std::size_t>(v)]; };
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        edges.push_back(make_edge(map(e.u), map(e.v)));
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& blk : g.blocks()) {
        auto& nb = blocks.emplace_back();
        for (auto v : blk)
            nb.push_back(map(v));
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(g.n());
        for (std::size_t v = 0; v < g.n(); ++v)
            labels[static_cast<std::size_t>(map(static_cast<Vertex>(v)))] = g.labels()[v];
    }
    return {g.n(), std::move(edges), std::move(blocks), std::move(labels)};
}

PartitionedGraph with_label_prefix(const PartitionedGraph& g, const std::string& prefix)
{
    std::vector<std::string> labels(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) {
        auto body = g.label(static_cast<Vertex>(v));
        labels[v] = prefix + (body.empty() ? std::to_string(v) : body);
    }
    return {g.n(), g.edges(), g.blocks(), std::move(labels)};
}

PartitionedGraph restrict_to_blocks(const PartitionedGraph& g, std::span<const BlockIndex> keep,
    std::vector<Vertex>* old_ids)
{
    std::vector<char> kept_block(g.r(), 0);
    for (auto b : keep)
        kept_block[static_cast<std::size_t>(b)] = 1;
    std::vector<Vertex> new_id(g.n(), kNoVertex);
    std::vector<Vertex> old;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (kept_block[static_cast<std::size_t>(g.block_of(static_cast<Vertex>(v)))]) {
            new_id[v] = static_cast<Vertex>(old.size());
            old.push_back(static_cast<Vertex>(v));
        }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        auto a = new_id[static_cast<std::size_t>(e.u)], b = new_id[static_cast<std::size_t>(e.v)];
        if (a != kNoVertex && b != kNoVertex)
            edges.push_back({a, b});
    }
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t b = 0; b < g.r(); ++b) {
        if (!kept_block[b])
            continue;
        auto& nb = blocks.emplace_back();
        for (auto v : g.blocks()[b])
            nb.push_back(new_id[static_cast<std::size_t>(v)]);
    }
    std::vector<std::string> labels;
    if (g.has_labels())
        for (auto v : old)
            labels.push_back(g.label(v));
    if (old_ids)
        *old_ids = old;
    return {old.size(), std::move(edges), std::move(blocks), std::move(labels)};
}

} // namespace itcraft
