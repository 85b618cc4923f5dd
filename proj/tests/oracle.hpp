#pragma once

// Brute-force references and random instance generators shared by the tests.
// Nothing here calls into the search code.

#include "itcraft/core.hpp"
#include "itcraft/listcover.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using itcraft::BlockIndex;
using itcraft::Edge;
using itcraft::PartitionedGraph;
using itcraft::Vertex;

// Every full transversal by Cartesian product, counted when independent.
inline std::uint64_t count_its(const PartitionedGraph& g)
{
    const auto r = g.r();
    std::vector<std::size_t> idx(r, 0);
    std::set<std::pair<Vertex, Vertex>> adj;
    for (const auto& e : g.edges())
        adj.insert({e.u, e.v});
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < r && ok; ++a)
            for (std::size_t b = a + 1; b < r && ok; ++b) {
                auto x = g.blocks()[a][idx[a]], y = g.blocks()[b][idx[b]];
                if (adj.count({std::min(x, y), std::max(x, y)}))
                    ok = false;
            }
        count += ok;
        std::size_t k = 0;
        while (k < r && ++idx[k] == g.blocks()[k].size())
            idx[k++] = 0;
        if (k == r)
            return count;
    }
}

inline bool has_it(const PartitionedGraph& g) { return oracle::count_its(g) > 0; }

// Keeps the listed blocks' vertices, renumbered ascending.
inline PartitionedGraph drop_block(const PartitionedGraph& g, std::size_t drop)
{
    std::vector<Vertex> id(g.n(), -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (static_cast<std::size_t>(g.block_of(static_cast<Vertex>(v))) != drop)
            id[v] = next++;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (id[static_cast<std::size_t>(e.u)] >= 0 && id[static_cast<std::size_t>(e.v)] >= 0)
            edges.push_back({id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]});
    std::vector<std::vector<Vertex>> blocks;
    for (std::size_t b = 0; b < g.r(); ++b) {
        if (b == drop)
            continue;
        blocks.emplace_back();
        for (auto v : g.blocks()[b])
            blocks.back().push_back(id[static_cast<std::size_t>(v)]);
    }
    return PartitionedGraph(static_cast<std::size_t>(next), edges, blocks);
}

inline bool block_minimal(const PartitionedGraph& g)
{
    if (oracle::has_it(g))
        return false;
    if (g.r() == 1)
        return true;
    for (std::size_t b = 0; b < g.r(); ++b)
        if (!oracle::has_it(drop_block(g, b)))
            return false;
    return true;
}

// Size of a largest partial IT, by trying every choice (or skip) per block.
inline std::size_t max_partial_size(const PartitionedGraph& g, const std::vector<char>& allowed)
{
    std::size_t best = 0;
    std::vector<Vertex> chosen;
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (chosen.size() + (g.r() - b) <= best)
            return;
        if (b == g.r()) {
            best = std::max(best, chosen.size());
            return;
        }
        for (auto v : g.blocks()[b]) {
            if (!allowed[static_cast<std::size_t>(v)])
                continue;
            if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, v); }))
                continue;
            chosen.push_back(v);
            self(self, b + 1);
            chosen.pop_back();
        }
        self(self, b + 1);
    };
    rec(rec, 0);
    return best;
}

inline std::uint64_t count_colorings(const itcraft::ListInstance& inst)
{
    std::vector<std::size_t> idx(inst.n, 0);
    std::uint64_t count = 0;
    if (inst.n == 0)
        return 1;
    while (true) {
        bool ok = true;
        for (const auto& e : inst.edges)
            if (inst.lists[static_cast<std::size_t>(e.u)][idx[static_cast<std::size_t>(e.u)]]
                == inst.lists[static_cast<std::size_t>(e.v)][idx[static_cast<std::size_t>(e.v)]])
                ok = false;
        count += ok;
        std::size_t k = 0;
        while (k < inst.n && ++idx[k] == inst.lists[k].size())
            idx[k++] = 0;
        if (k == inst.n)
            return count;
    }
}

// Random graph with n vertices in r nonempty blocks (n >= r), edge probability p.
inline PartitionedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t r, double p)
{
    std::vector<Vertex> order(n);
    for (std::size_t v = 0; v < n; ++v)
        order[v] = static_cast<Vertex>(v);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<Vertex>> blocks(r);
    for (std::size_t i = 0; i < n; ++i)
        blocks[i < r ? i : std::uniform_int_distribution<std::size_t>(0, r - 1)(rng)].push_back(order[i]);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return PartitionedGraph(n, edges, blocks);
}

// Random graph with max degree <= d and every block of size >= 2d.
inline PartitionedGraph random_sparse(std::mt19937_64& rng, std::size_t d, std::size_t r)
{
    std::vector<std::vector<Vertex>> blocks(r);
    std::size_t n = 0;
    for (auto& b : blocks) {
        const auto size = 2 * d + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
        for (std::size_t t = 0; t < size; ++t)
            b.push_back(static_cast<Vertex>(n++));
    }
    std::vector<std::size_t> deg(n, 0);
    std::set<std::pair<Vertex, Vertex>> edges;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (std::size_t tries = 0; tries < 4 * n * d; ++tries) {
        auto u = pick(rng), v = pick(rng);
        if (u == v || deg[static_cast<std::size_t>(u)] >= d || deg[static_cast<std::size_t>(v)] >= d)
            continue;
        if (edges.insert({std::min(u, v), std::max(u, v)}).second) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
    }
    std::vector<Edge> list;
    for (auto [u, v] : edges)
        list.push_back({u, v});
    return PartitionedGraph(n, list, blocks);
}

inline itcraft::ListInstance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t colors, double p)
{
    itcraft::ListInstance inst;
    inst.n = n;
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
            if (coin(rng))
                inst.edges.push_back({u, v});
    std::uniform_int_distribution<std::size_t> len(1, 3);
    std::uniform_int_distribution<itcraft::Color> col(1, static_cast<itcraft::Color>(colors));
    for (std::size_t x = 0; x < n; ++x) {
        std::set<itcraft::Color> l;
        const auto want = len(rng);
        while (l.size() < std::min<std::size_t>(want, colors))
            l.insert(col(rng));
        inst.lists.emplace_back(l.begin(), l.end());
    }
    return inst;
}

} // namespace oracle
