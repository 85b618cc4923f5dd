#include "oracle.hpp"

#include "itcraft/construct.hpp"
#include "itcraft/core.hpp"
#include "itcraft/error.hpp"
#include "itcraft/io.hpp"

#include <doctest.h>

#include <random>

using namespace itcraft;

namespace {

PartitionedGraph k33() { return gen_complete_bipartite(3, 3); }

PartitionedGraph triangle() { return PartitionedGraph(3, {{0, 1}, {1, 2}, {0, 2}}, {{0}, {1}, {2}}); }

// a=0, b=1, c=2 path plus isolated d=3.
PartitionedGraph path_plus_point() { return PartitionedGraph(4, {{0, 1}, {1, 2}}, {{0, 1}, {2, 3}}); }

} // namespace

TEST_CASE("graph construction rejects malformed input")
{
    auto code = [](auto&& f) {
        try {
            f();
        }
        catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Invalid;
    };
    CHECK(code([] { PartitionedGraph(2, {{0, 0}}, {{0, 1}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(2, {{0, 1}, {1, 0}}, {{0, 1}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(2, {}, {{0}, {}, {1}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(3, {}, {{0, 1}, {1, 2}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(3, {}, {{0, 1}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(2, {{0, 5}}, {{0, 1}}); }) == ErrorCode::InvalidGraph);
    CHECK(code([] { PartitionedGraph(0, {}, {}); }) == ErrorCode::InvalidGraph);
}

TEST_CASE("blocks are canonically ordered")
{
    PartitionedGraph g(4, {{3, 0}}, {{3, 1}, {2, 0}});
    CHECK(g.blocks() == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}});
    CHECK(g.block_of(3) == 1);
}

TEST_CASE("components")
{
    SUBCASE("K33")
    {
        auto c = components(k33());
        REQUIRE(c.size() == 1);
        CHECK(c[0].complete_bipartite);
        CHECK(c[0].side_a.size() == 3);
        CHECK(c[0].side_b.size() == 3);
    }
    SUBCASE("Szabo-Tardos d=3")
    {
        auto c = components(gen_szabo_tardos(3).graph);
        CHECK(c.size() == 5);
        for (const auto& comp : c) {
            CHECK(comp.complete_bipartite);
            CHECK(comp.side_a.size() == 3);
            CHECK(comp.side_b.size() == 3);
        }
    }
    SUBCASE("path and a point")
    {
        auto c = components(path_plus_point());
        REQUIRE(c.size() == 2);
        CHECK(c[0].complete_bipartite);
        // The side holding the smallest id is A, so the centre lands in B.
        CHECK(c[0].side_a == std::vector<Vertex>{0, 2});
        CHECK(c[0].side_b == std::vector<Vertex>{1});
        CHECK(c[1].vertices == std::vector<Vertex>{3});
        CHECK(c[1].complete_bipartite);
        CHECK(c[1].side_b.empty());
    }
    SUBCASE("odd cycle and a non-complete bipartite path")
    {
        CHECK_FALSE(components(triangle())[0].complete_bipartite);
        PartitionedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}});
        CHECK_FALSE(components(p4)[0].complete_bipartite);
    }
}

TEST_CASE("stats")
{
    CHECK(stats(gen_locally_sparse(2, 1).graph).max_degree == 2);
    auto ls = stats(gen_locally_sparse(2, 1).graph);
    CHECK(ls.local_degree == 1);
    CHECK(ls.multiplicity == 1);

    auto s = stats(k33());
    CHECK(s.max_degree == 3);
    CHECK(s.local_degree == 3);
    CHECK(s.multiplicity == 3);

    auto st = stats(gen_szabo_tardos(2).graph);
    CHECK(st.max_degree == 2);
    CHECK(st.component_count == 3);
    CHECK(st.block_sizes == std::vector<std::size_t>{3, 3, 3, 3});
}

TEST_CASE("is_cb_union")
{
    CHECK(is_cb_union(gen_szabo_tardos(3).graph));
    CHECK_FALSE(is_cb_union(triangle()));
    CHECK_FALSE(is_cb_union(gen_star_free_cx(3, 6).graph));
}

TEST_CASE("is_star_free")
{
    CHECK(is_star_free(gen_complete_bipartite(2, 2), 3));
    CHECK(is_star_free(gen_star_free_cx(3, 6).graph, 3));
    CHECK_FALSE(is_star_free(k33(), 3));
    CHECK_FALSE(is_star_free(path_plus_point(), 2));
}

TEST_CASE("block_graph")
{
    auto empty = block_graph(k33(), {});
    CHECK(empty.active.empty());
    CHECK(empty.is_tree());

    auto k22 = gen_complete_bipartite(2, 2);
    std::vector<Vertex> I{0, 2};
    auto bg = block_graph(k22, I);
    CHECK(bg.active.size() == 2);
    CHECK(bg.degree(0) == 1);
    CHECK(bg.is_tree());
    CHECK(bg.covered.size() == 4);

    // two vertices of one block joined by an edge is a contracted loop
    PartitionedGraph same(2, {{0, 1}}, {{0, 1}});
    std::vector<Vertex> both{0, 1};
    CHECK_FALSE(block_graph(same, both).is_tree());
}

TEST_CASE("complement_connected")
{
    CHECK_FALSE(complement_connected(gen_complete_bipartite(2, 2)));
    // the middle of a path on three vertices is isolated in the complement
    PartitionedGraph p3(3, {{0, 1}, {1, 2}}, {{0, 1, 2}});
    CHECK_FALSE(complement_connected(p3));
    PartitionedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}});
    CHECK(complement_connected(p4));

    // K_{4,4} with two disjoint K_2 cliques per side
    auto g = gen_complete_bipartite(4, 4);
    std::vector<Edge> extra{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    std::vector<Edge> all = g.edges();
    all.insert(all.end(), extra.begin(), extra.end());
    PartitionedGraph h(8, all, g.blocks());
    CHECK_FALSE(complement_connected(h));
}

TEST_CASE("json round trip and canonical bytes")
{
    auto g = gen_szabo_tardos(2).graph;
    auto j = graph_to_json(g);
    CHECK(j["version"] == 1);
    CHECK(j.contains("labels"));
    auto back = graph_from_json(j);
    CHECK(back == g);
    CHECK(canonical_string(back) == canonical_string(g));

    PartitionedGraph plain(2, {{0, 1}}, {{0}, {1}});
    CHECK_FALSE(graph_to_json(plain).contains("labels"));

    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"version":2,"n":1,"edges":[],"blocks":[[0]]})")), Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"version":1,"n":"x"})")), Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"([1,2])")), Error);
}

TEST_CASE("relabel and restrict")
{
    auto g = gen_complete_bipartite(2, 1);
    std::vector<Vertex> perm{2, 0, 1};
    auto h = relabel(g, perm);
    CHECK(h.n() == 3);
    CHECK(h.adjacent(2, 1));
    CHECK(h.adjacent(0, 1));
    CHECK_FALSE(h.adjacent(2, 0));

    std::vector<BlockIndex> keep{1};
    std::vector<Vertex> old;
    auto s = restrict_to_blocks(gen_szabo_tardos(2).graph, keep, &old);
    CHECK(s.r() == 1);
    CHECK(s.n() == 3);
    CHECK(old.size() == 3);
}

TEST_CASE("core properties on random graphs")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
        const auto r = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        auto g = oracle::random_graph(rng, n, r, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
        auto comps = components(g);
        std::vector<int> seen(n, 0);
        bool all_flagged = true;
        for (const auto& c : comps) {
            for (auto v : c.vertices)
                ++seen[static_cast<std::size_t>(v)];
            all_flagged = all_flagged && c.complete_bipartite;
            if (c.complete_bipartite && !c.side_b.empty()) {
                for (auto a : c.side_a)
                    for (auto b : c.side_b)
                        REQUIRE(g.adjacent(a, b));
                for (auto a : c.side_a)
                    for (auto a2 : c.side_a)
                        REQUIRE_FALSE(g.adjacent(a, a2));
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
        const auto s = stats(g);
        CHECK(s.local_degree <= s.multiplicity);
        CHECK(s.block_sizes.size() == g.r());
        CHECK(is_cb_union(g) == all_flagged);
        std::vector<Vertex> everything(n);
        for (std::size_t v = 0; v < n; ++v)
            everything[v] = static_cast<Vertex>(v);
        CHECK(block_graph(g, everything).active.size() == g.r());
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}
