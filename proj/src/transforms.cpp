#include "itcraft/transforms.hpp"

#include "itcraft/error.hpp"

#include <algorithm>
#include <set>

namespace itcraft {

namespace {

    void check_vertex(const PartitionedGraph& g, Vertex v, ErrorCode code, const char* what)
    {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n())
            throw Error(code, std::string(what) + " " + std::to_string(v) + " is not a vertex");
    }

    std::vector<std::string> merged_labels(const PartitionedGraph& first, const PartitionedGraph& second)
    {
        if (!first.has_labels() && !second.has_labels())
            return {};
        std::vector<std::string> out;
        out.reserve(first.n() + second.n());
        for (std::size_t v = 0; v < first.n(); ++v)
            out.push_back(first.label(static_cast<Vertex>(v)));
        for (std::size_t v = 0; v < second.n(); ++v)
            out.push_back(second.label(static_cast<Vertex>(v)));
        return out;
    }

} // namespace

PartitionedGraph join(const PartitionedGraph& host, const PartitionedGraph& added, BlockIndex s,
    const Distribution& dist, JoinLayout layout)
{
    if (s < 0 || static_cast<std::size_t>(s) >= added.r())
        throw Error(ErrorCode::InvalidDistribution, "dissolved block " + std::to_string(s) + " out of range");
    const auto& dissolved = added.block(s);
    if (dist.size() != dissolved.size())
        throw Error(ErrorCode::InvalidDistribution, "distribution must cover exactly the dissolved block");
    for (const auto& [v, target] : dist) {
        if (v < 0 || static_cast<std::size_t>(v) >= added.n() || added.block_of(v) != s)
            throw Error(ErrorCode::InvalidDistribution, "vertex " + std::to_string(v) + " is not in the dissolved block");
        if (target < 0 || static_cast<std::size_t>(target) >= host.r())
            throw Error(ErrorCode::InvalidDistribution, "target block " + std::to_string(target) + " out of range");
    }

    const bool host_first = layout == JoinLayout::HostFirst;
    const auto host_off = static_cast<Vertex>(host_first ? 0 : added.n());
    const auto added_off = static_cast<Vertex>(host_first ? host.n() : 0);

    std::vector<Edge> edges;
    edges.reserve(host.edge_count() + added.edge_count());
    for (const auto& e : host.edges())
        edges.push_back({e.u + host_off, e.v + host_off});
    for (const auto& e : added.edges())
        edges.push_back({e.u + added_off, e.v + added_off});

    std::vector<std::vector<Vertex>> blocks;
    blocks.reserve(host.r() + added.r() - 1);
    for (const auto& b : host.blocks()) {
        auto& nb = blocks.emplace_back();
        for (auto v : b)
            nb.push_back(v + host_off);
    }
    for (const auto& [v, target] : dist)
        blocks[static_cast<std::size_t>(target)].push_back(v + added_off);
    for (std::size_t b = 0; b < added.r(); ++b) {
        if (static_cast<BlockIndex>(b) == s)
            continue;
        auto& nb = blocks.emplace_back();
        for (auto v : added.blocks()[b])
            nb.push_back(v + added_off);
    }

    auto labels = host_first ? merged_labels(host, added) : merged_labels(added, host);
    return {host.n() + added.n(), std::move(edges), std::move(blocks), std::move(labels)};
}

PartitionedGraph edge_delete(const PartitionedGraph& g, const EdgeDeletePlan& plan)
{
    check_vertex(g, plan.u, ErrorCode::InvalidPlan, "endpoint");
    check_vertex(g, plan.v, ErrorCode::InvalidPlan, "endpoint");
    if (!g.adjacent(plan.u, plan.v))
        throw Error(ErrorCode::EdgeAbsent,
            "edge " + std::to_string(plan.u) + "-" + std::to_string(plan.v) + " is not in the graph");
    const auto i = g.block_of(plan.u), j = g.block_of(plan.v);
    if (i == j)
        throw Error(ErrorCode::InvalidPlan, "deleted edge lies inside one block");
    if (plan.k < 0 || static_cast<std::size_t>(plan.k) >= g.r())
        throw Error(ErrorCode::InvalidPlan, "block k out of range");
    if (plan.k == i || plan.k == j)
        throw Error(ErrorCode::InvalidPlan, "block k contains an endpoint of the deleted edge");

    std::set<Vertex> covered;
    for (const auto& f : plan.F) {
        check_vertex(g, f.u, ErrorCode::InvalidPlan, "F endpoint");
        check_vertex(g, f.v, ErrorCode::InvalidPlan, "F endpoint");
        const bool a_end = f.u == plan.u || f.u == plan.v;
        const bool b_end = f.v == plan.u || f.v == plan.v;
        Vertex other = kNoVertex;
        if (a_end && g.block_of(f.v) == plan.k)
            other = f.v;
        else if (b_end && g.block_of(f.u) == plan.k)
            other = f.u;
        if (other == kNoVertex)
            throw Error(ErrorCode::InvalidPlan, "F edge does not join u or v to block k");
        covered.insert(other);
    }
    if (covered.size() != g.block(plan.k).size())
        throw Error(ErrorCode::InvalidPlan, "F leaves a vertex of block k uncovered");

    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    edges.erase(make_edge(plan.u, plan.v));
    for (const auto& f : plan.F)
        edges.insert(make_edge(f.u, f.v));
    return {g.n(), {edges.begin(), edges.end()}, g.blocks(), g.labels()};
}

PartitionedGraph add_edges(const PartitionedGraph& g, const std::vector<Edge>& extra)
{
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : extra) {
        check_vertex(g, e.u, ErrorCode::InvalidArgument, "edge endpoint");
        check_vertex(g, e.v, ErrorCode::InvalidArgument, "edge endpoint");
        if (e.u == e.v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
        edges.insert(make_edge(e.u, e.v));
    }
    return {g.n(), {edges.begin(), edges.end()}, g.blocks(), g.labels()};
}

PartitionedGraph delete_vertices(const PartitionedGraph& g, const std::vector<Vertex>& doomed,
    std::vector<Vertex>* old_ids)
{
    std::vector<char> gone(g.n(), 0);
    for (auto v : doomed) {
        check_vertex(g, v, ErrorCode::InvalidArgument, "doomed vertex");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> new_id(g.n(), kNoVertex), old;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!gone[v]) {
            new_id[v] = static_cast<Vertex>(old.size());
            old.push_back(static_cast<Vertex>(v));
        }

    std::vector<std::vector<Vertex>> blocks;
    for (const auto& b : g.blocks()) {
        auto& nb = blocks.emplace_back();
        for (auto v : b)
            if (!gone[static_cast<std::size_t>(v)])
                nb.push_back(new_id[static_cast<std::size_t>(v)]);
        if (nb.empty())
            throw Error(ErrorCode::EmptiesBlock, "deletion empties the block containing " + std::to_string(b.front()));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)])
            edges.push_back({new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)]});
    std::vector<std::string> labels;
    if (g.has_labels())
        for (auto v : old)
            labels.push_back(g.label(v));
    if (old_ids)
        *old_ids = old;
    return {old.size(), std::move(edges), std::move(blocks), std::move(labels)};
}

PartitionedGraph blow_up(const PartitionedGraph& g, std::size_t m)
{
    if (m < 1)
        throw Error(ErrorCode::InvalidArgument, "blow-up factor must be at least 1");
    const auto mm = static_cast<Vertex>(m);
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * m * m);
    for (const auto& e : g.edges())
        for (Vertex a = 0; a < mm; ++a)
            for (Vertex b = 0; b < mm; ++b)
                edges.push_back({e.u * mm + a, e.v * mm + b});
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& b : g.blocks()) {
        auto& nb = blocks.emplace_back();
        for (auto v : b)
            for (Vertex t = 0; t < mm; ++t)
                nb.push_back(v * mm + t);
    }
    std::vector<std::string> labels;
    if (g.has_labels())
        for (std::size_t v = 0; v < g.n(); ++v)
            for (std::size_t t = 0; t < m; ++t) {
                const auto& base = g.labels()[v];
                labels.push_back(base.empty() ? std::string() : base + "#" + std::to_string(t));
            }
    return {g.n() * m, std::move(edges), std::move(blocks), std::move(labels)};
}

bool check_block_sum_condition(const PartitionedGraph& g, std::size_t n)
{
    auto sizes = g.block_sizes();
    std::sort(sizes.begin(), sizes.end());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        sum += sizes[i];
        if (sum < n * i + 1)
            return false;
    }
    return true;
}

} // namespace itcraft
