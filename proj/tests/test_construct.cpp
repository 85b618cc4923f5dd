#include "oracle.hpp"

#include "itcraft/certify.hpp"
#include "itcraft/construct.hpp"
#include "itcraft/error.hpp"
#include "itcraft/io.hpp"
#include "itcraft/transforms.hpp"

#include <doctest.h>

#include <random>

using namespace itcraft;

namespace {

ErrorCode code_of(auto&& f)
{
    try {
        f();
    }
    catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Invalid;
}

std::vector<std::size_t> sorted_sizes(const PartitionedGraph& g)
{
    auto s = g.block_sizes();
    std::sort(s.begin(), s.end());
    return s;
}

PartitionedGraph c4() { return PartitionedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}, {1, 3}}); }

bool is_cycle(const PartitionedGraph& g)
{
    if (g.edge_count() != g.n())
        return false;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (g.degree(static_cast<Vertex>(v)) != 2)
            return false;
    return components(g).size() == 1;
}

// Random graph on <= 10 vertices with no IT.
PartitionedGraph random_no_it(std::mt19937_64& rng, std::size_t max_n = 6)
{
    while (true) {
        const auto r = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
        const auto n = std::uniform_int_distribution<std::size_t>(r, max_n)(rng);
        auto g = oracle::random_graph(rng, n, r, std::uniform_real_distribution<double>(0.5, 1.0)(rng));
        if (!oracle::has_it(g))
            return g;
    }
}

Distribution random_dist(std::mt19937_64& rng, const PartitionedGraph& host, const PartitionedGraph& added, BlockIndex s)
{
    Distribution d;
    for (auto v : added.block(s))
        d[v] = std::uniform_int_distribution<BlockIndex>(0, static_cast<BlockIndex>(host.r() - 1))(rng);
    return d;
}

} // namespace

TEST_CASE("join examples")
{
    SUBCASE("first step of the Szabo-Tardos derivation")
    {
        auto k = gen_complete_bipartite(3, 3);
        auto g = join(k, k, 0, Distribution{{0, 0}, {1, 1}, {2, 1}});
        CHECK(g.n() == 12);
        CHECK(g.r() == 3);
        CHECK(sorted_sizes(g) == std::vector<std::size_t>{3, 4, 5});
        CHECK(find_it(g).status == SearchStatus::None);
        CHECK(oracle::count_its(g) == 0);
    }
    SUBCASE("two single edges")
    {
        auto e = PartitionedGraph(2, {{0, 1}}, {{0}, {1}});
        auto g = join(e, e, 1, Distribution{{1, 0}});
        CHECK(g.blocks() == std::vector<std::vector<Vertex>>{{0, 3}, {1}, {2}});
        CHECK(count_its(g).count == 0u);
    }
    SUBCASE("distribution errors")
    {
        auto k = gen_complete_bipartite(2, 2);
        CHECK(code_of([&] { join(k, k, 0, Distribution{{0, 0}}); }) == ErrorCode::InvalidDistribution);
        CHECK(code_of([&] { join(k, k, 0, Distribution{{0, 0}, {2, 0}}); }) == ErrorCode::InvalidDistribution);
        CHECK(code_of([&] { join(k, k, 0, Distribution{{0, 0}, {1, 7}}); }) == ErrorCode::InvalidDistribution);
        CHECK(code_of([&] { join(k, k, 5, Distribution{}); }) == ErrorCode::InvalidDistribution);
    }
    SUBCASE("added-first layout shifts the host")
    {
        auto e = PartitionedGraph(2, {{0, 1}}, {{0}, {1}});
        auto g = join(e, e, 1, Distribution{{1, 0}}, JoinLayout::AddedFirst);
        CHECK(g.n() == 4);
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(2, 3));
        CHECK(g.block_of(1) == g.block_of(2));
    }
}

TEST_CASE("edge_delete builds a 7-cycle")
{
    auto star = gen_complete_bipartite(1, 2);
    auto g = join(c4(), star, 0, Distribution{{0, 0}});
    REQUIRE(g.n() == 7);
    const auto k = g.block_of(5);
    EdgeDeletePlan plan{0, 1, k, {{0, 5}, {1, 6}}};
    auto h = edge_delete(g, plan);
    CHECK(is_cycle(h));
    CHECK(sorted_sizes(h) == std::vector<std::size_t>{2, 2, 3});
    CHECK(oracle::count_its(h) == 0);

    CHECK(code_of([&] { edge_delete(g, EdgeDeletePlan{0, 1, g.block_of(0), {{0, 5}, {1, 6}}}); })
        == ErrorCode::InvalidPlan);
    CHECK(code_of([&] { edge_delete(g, EdgeDeletePlan{0, 1, k, {{0, 5}}}); }) == ErrorCode::InvalidPlan);
    CHECK(code_of([&] { edge_delete(g, EdgeDeletePlan{0, 2, k, {{0, 5}, {2, 6}}}); }) == ErrorCode::EdgeAbsent);
    CHECK(code_of([&] { edge_delete(g, EdgeDeletePlan{0, 1, k, {{0, 5}, {3, 6}}}); }) == ErrorCode::InvalidPlan);
}

TEST_CASE("add_edges")
{
    auto k = gen_complete_bipartite(2, 2);
    auto g = add_edges(k, {{0, 1}, {2, 3}});
    CHECK(g.edge_count() == 6);
    CHECK(count_its(g).count == 0u);
    CHECK(add_edges(k, {}) == k);
    CHECK(add_edges(k, {{0, 2}}) == k);
    CHECK(code_of([&] { add_edges(k, {{1, 1}}); }) == ErrorCode::LoopEdge);

    auto k66 = gen_complete_bipartite(6, 6);
    auto unit = add_edges(k66, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}, {9, 10},
                                   {9, 11}, {10, 11}});
    CHECK(unit.n() == 12);
    CHECK(stats(unit).max_degree == 8);
}

TEST_CASE("delete_vertices")
{
    auto st = gen_szabo_tardos(2).graph;
    std::vector<Vertex> old;
    auto g = delete_vertices(st, {st.block(0).front()}, &old);
    CHECK(g.n() == 11);
    CHECK(old.size() == 11);
    CHECK(find_it(g).status == SearchStatus::None);
    CHECK(delete_vertices(st, {}) == st);
    CHECK(code_of([&] { delete_vertices(st, st.block(1)); }) == ErrorCode::EmptiesBlock);
}

TEST_CASE("blow_up")
{
    auto e = PartitionedGraph(2, {{0, 1}}, {{0}, {1}});
    auto k = blow_up(e, 3);
    CHECK(k.n() == 6);
    CHECK(k.edge_count() == 9);
    CHECK(is_cb_union(k));
    CHECK(k.block_sizes() == std::vector<std::size_t>{3, 3});

    auto c = blow_up(c4(), 2);
    CHECK(c.n() == 8);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(c.degree(v) == 4);
    CHECK(blow_up(c4(), 1) == c4());
    CHECK(count_its(blow_up(gen_complete_bipartite(2, 2), 2)).count == 0u);
}

TEST_CASE("check_block_sum_condition")
{
    for (std::size_t d = 1; d <= 4; ++d)
        CHECK(check_block_sum_condition(gen_complete_bipartite(d, d), 2 * d - 1));
    CHECK_FALSE(check_block_sum_condition(PartitionedGraph(2, {{0, 1}}, {{0}, {1}}), 2));
    CHECK(check_block_sum_condition(gen_szabo_tardos(2).graph, 3));
    CHECK_FALSE(check_block_sum_condition(gen_complete_bipartite(2, 2), 4));
}

TEST_CASE("gen_complete_bipartite")
{
    auto g = gen_complete_bipartite(3, 3);
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(find_it(g).status == SearchStatus::None);
    auto e = gen_complete_bipartite(1, 1);
    CHECK(e.edge_count() == 1);
    CHECK(e.block_sizes() == std::vector<std::size_t>{1, 1});
    auto u = gen_complete_bipartite(4, 3);
    CHECK(u.block_sizes() == std::vector<std::size_t>{4, 3});
    CHECK(code_of([] { gen_complete_bipartite(0, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("gen_szabo_tardos and gen_yuster")
{
    for (std::size_t d = 1; d <= 3; ++d) {
        auto c = gen_szabo_tardos(d);
        CHECK(c.graph.n() == 2 * d * (2 * d - 1));
        CHECK(c.graph.r() == 2 * d);
        for (auto s : c.graph.block_sizes())
            CHECK(s == 2 * d - 1);
        CHECK(stats(c.graph).component_count == 2 * d - 1);
        CHECK(certifies(c.certificate, c.graph));
    }
    auto y2 = gen_yuster(2);
    CHECK(y2.graph.block_sizes() == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(find_it(y2.graph).status == SearchStatus::None);
    auto y4 = gen_yuster(4);
    CHECK(stats(y4.graph).component_count == 7);
    CHECK(y4.graph.r() == 8);
    for (auto s : y4.graph.block_sizes())
        CHECK(s == 7);
    CHECK(certifies(y4.certificate, y4.graph));
    CHECK(code_of([] { gen_yuster(3); }) == ErrorCode::NotPowerOfTwo);

    CHECK(colorful_components(gen_complete_bipartite(1, 1)) == std::vector<std::size_t>{0});
    CHECK(colorful_components(gen_complete_bipartite(2, 2)).empty());
    // a K_{2,2} whose four vertices sit in four different blocks
    PartitionedGraph spread(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 4}, {1}, {2}, {3}});
    CHECK(colorful_components(spread) == std::vector<std::size_t>{0});
    for (std::size_t d = 1; d <= 4; d *= 2)
        CHECK(colorful_components(gen_yuster(d).graph).size() <= 1);
}

TEST_CASE("gen_cycle_partition")
{
    auto c1 = gen_cycle_partition(1).graph;
    CHECK(c1.block_sizes() == std::vector<std::size_t>{2, 2});
    CHECK(is_cycle(c1));
    auto c2 = gen_cycle_partition(2);
    CHECK(is_cycle(c2.graph));
    CHECK(c2.graph.n() == 7);
    CHECK(sorted_sizes(c2.graph) == std::vector<std::size_t>{2, 2, 3});
    CHECK(certifies(c2.certificate, c2.graph));
    auto c3 = gen_cycle_partition(3).graph;
    CHECK(is_cycle(c3));
    CHECK(sorted_sizes(c3) == std::vector<std::size_t>{2, 2, 3, 3});
    CHECK(oracle::count_its(c3) == 0);
}

TEST_CASE("gen_three_cycles")
{
    auto a = gen_three_cycles(4, 4, 4);
    CHECK(a.graph.n() == 12);
    CHECK(a.graph.block_sizes() == std::vector<std::size_t>{3, 3, 3, 3});
    auto b = gen_three_cycles(4, 7, 10);
    CHECK(b.graph.n() == 21);
    CHECK(b.graph.r() == 7);
    CHECK(oracle::count_its(b.graph) == 0);
    CHECK(certifies(b.certificate, b.graph));
    CHECK(code_of([] { gen_three_cycles(5, 4, 4); }) == ErrorCode::BadLength);
    CHECK(code_of([] { gen_three_cycles(1, 4, 4); }) == ErrorCode::BadLength);
}

TEST_CASE("gen_multipartite_base")
{
    auto k = gen_multipartite_base(2, 3);
    CHECK(k.n() == 6);
    CHECK(k.edge_count() == 9);
    CHECK(is_cb_union(k));
    auto t = gen_multipartite_base(3, 1);
    CHECK(stats(t).component_count == 2);
    CHECK(t.block_sizes() == std::vector<std::size_t>{2, 2, 2});
    CHECK(stats(t).max_degree == 2);
    auto m = gen_multipartite_base(3, 2);
    CHECK(m.block_sizes() == std::vector<std::size_t>{4, 4, 4});
    CHECK(stats(m).max_degree == 4);
    CHECK(find_it(m).status == SearchStatus::None);
}

TEST_CASE("gen_locally_sparse")
{
    auto a = gen_locally_sparse(2, 1);
    CHECK(a.graph.n() == 36);
    CHECK(a.graph.r() == 12);
    for (auto s : a.graph.block_sizes())
        CHECK(s == 3);
    auto s = stats(a.graph);
    CHECK(s.max_degree == 2);
    CHECK(s.local_degree == 1);
    CHECK(s.multiplicity == 1);

    auto b = gen_locally_sparse(2, 2);
    for (auto x : b.graph.block_sizes())
        CHECK(x >= 3);
    auto c = gen_locally_sparse(4, 1);
    for (auto x : c.graph.block_sizes())
        CHECK(x >= 5);
    CHECK(code_of([] { gen_locally_sparse(3, 2); }) == ErrorCode::NotDivisible);
}

TEST_CASE("gen_list_coloring_cx")
{
    auto a = gen_list_coloring_cx(2);
    CHECK(a.graph.r() == 36);
    CHECK(a.graph.n() == 108);
    auto b = gen_list_coloring_cx(3);
    CHECK(b.graph.r() == 64);
    for (auto x : b.graph.block_sizes())
        CHECK(x == 4);
    CHECK(stats(b.graph).max_degree == 3);
    CHECK(certifies(b.certificate, b.graph));
}

TEST_CASE("gen_star_free_cx")
{
    auto a = gen_star_free_cx(3, 6);
    CHECK(a.report.d == 8);
    CHECK(a.report.block_size == 11);
    CHECK(a.report.bound == 10);
    CHECK(a.report.counterexample);
    CHECK(stats(a.graph).max_degree == 8);
    CHECK(is_star_free(a.graph, 3));

    auto b = gen_star_free_cx(3, 2);
    CHECK(b.report.d == 2);
    CHECK(b.report.block_size == 3);
    CHECK_FALSE(b.report.counterexample);

    auto c = gen_star_free_cx(4, 6);
    CHECK(c.report.d == 7);
    CHECK(c.report.block_size == 11);
    CHECK(c.report.counterexample);
    CHECK(is_star_free(c.graph, 4));
    CHECK(code_of([] { gen_star_free_cx(3, 5); }) == ErrorCode::NotDivisible);
}

TEST_CASE("gen_ahhs_cx")
{
    auto a = gen_ahhs_cx(2);
    CHECK(a.graph.n() == 24);
    CHECK(a.graph.r() == 8);
    CHECK(oracle::count_its(a.graph) == 0);
    for (const auto& comp : components(a.graph)) {
        if (comp.side_a.size() != 2 || comp.side_b.size() != 2)
            continue;
        std::set<BlockIndex> met;
        for (auto v : comp.vertices)
            met.insert(a.graph.block_of(v));
        CHECK(met.size() >= 4);
    }
    auto b = gen_ahhs_cx(3);
    CHECK(b.graph.n() == 60);
    CHECK(b.graph.r() == 12);
    for (auto x : b.graph.block_sizes())
        CHECK(x == 5);
}

TEST_CASE("gen_join_power and the families built on it")
{
    auto a = gen_join_power(gen_complete_bipartite(2, 2), 3);
    CHECK(a.report.copies == 3);
    CHECK(a.graph.block_sizes() == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(a.graph.r() == a.report.copies * (2 - 1) + 1);

    auto b = gen_complete_multipartite(3, 2);
    // the seed holds two K_3(2), so four seed copies give eight
    CHECK(b.report.copies == 4);
    CHECK(b.report.matches_formula);
    CHECK(complete_multipartite_copies(3, 2) == 8);
    CHECK(stats(b.graph).component_count == 8);
    CHECK(b.graph.r() == 4 * 2 + 1);
    for (auto x : b.graph.block_sizes())
        CHECK(x >= 5);

    CHECK(code_of([] { gen_join_power(PartitionedGraph(2, {{0, 1}}, {{0}, {1}}), 2); }) == ErrorCode::ConditionFails);
    CHECK(code_of([] { gen_join_power(PartitionedGraph(4, {}, {{0, 1}, {2, 3}}), 1); }) == ErrorCode::SeedHasIT);

    auto padded = gen_join_power(gen_complete_bipartite(2, 2), 3, 5);
    CHECK(padded.report.copies == 5);
    CHECK(padded.report.padding == 2);
    CHECK(find_it(padded.graph).status == SearchStatus::None);
    CHECK(certifies(padded.certificate, padded.graph));

    auto g34 = gen_general_szabo_tardos(3, 4);
    CHECK(stats(g34.graph).component_count == 3);
    CHECK(g34.graph.r() == 4);
    auto g56 = gen_general_szabo_tardos(5, 6);
    CHECK(stats(g56.graph).component_count == 5);
    CHECK(stats(g56.graph).max_degree == 3);
    for (auto x : g56.graph.block_sizes())
        CHECK(x >= 5);
    auto g12 = gen_general_szabo_tardos(1, 2);
    CHECK(g12.graph.n() == 2);
    CHECK(g12.graph.edge_count() == 1);
    CHECK(code_of([] { gen_general_szabo_tardos(3, 5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("every generator certificate replays to the generator output")
{
    std::vector<Construction> all{gen_szabo_tardos(1), gen_szabo_tardos(4), gen_yuster(2), gen_cycle_partition(1),
        gen_cycle_partition(5), gen_three_cycles(7, 4, 10), gen_locally_sparse(2, 2), gen_locally_sparse(3, 1),
        gen_list_coloring_cx(2), gen_ahhs_cx(2), gen_random_kdd_joins(3, 4, 99)};
    auto sf = gen_star_free_cx(3, 6);
    all.push_back({sf.graph, sf.certificate});
    for (auto jp : {gen_general_szabo_tardos(5, 6), gen_complete_multipartite(3, 2), gen_complete_multipartite(4, 3)})
        all.push_back({jp.graph, jp.certificate});
    for (const auto& c : all) {
        auto rep = verify_certificate(c.certificate);
        CHECK(canonical_string(rep.graph) == canonical_string(c.graph));
        CHECK(canonical_string(verify_certificate(c.certificate).graph) == canonical_string(rep.graph));
    }
}

TEST_CASE("join soundness and minimality preservation on random small pairs")
{
    std::mt19937_64 rng(21);
    int minimal_pairs = 0;
    for (int iter = 0; iter < 300; ++iter) {
        auto host = random_no_it(rng);
        auto added = random_no_it(rng);
        const auto s = std::uniform_int_distribution<BlockIndex>(0, static_cast<BlockIndex>(added.r() - 1))(rng);
        auto out = join(host, added, s, random_dist(rng, host, added, s));
        CHECK_FALSE(oracle::has_it(out));
        CHECK(out.r() == host.r() + added.r() - 1);
        if (oracle::block_minimal(host) && oracle::block_minimal(added)) {
            ++minimal_pairs;
            CHECK(oracle::block_minimal(out));
        }
    }
    CHECK(minimal_pairs > 10);
}

TEST_CASE("edge_delete soundness on random plans")
{
    std::mt19937_64 rng(22);
    int tried = 0;
    for (int iter = 0; iter < 2000 && tried < 300; ++iter) {
        auto a = random_no_it(rng, 5);
        auto b = random_no_it(rng, 5);
        auto g = join(a, b, 0, random_dist(rng, a, b, 0));
        if (g.r() < 3 || g.n() > 10)
            continue;
        std::vector<Edge> cross;
        for (const auto& e : g.edges())
            if (g.block_of(e.u) != g.block_of(e.v))
                cross.push_back(e);
        if (cross.empty())
            continue;
        const auto uv = cross[std::uniform_int_distribution<std::size_t>(0, cross.size() - 1)(rng)];
        std::vector<BlockIndex> others;
        for (BlockIndex k = 0; k < static_cast<BlockIndex>(g.r()); ++k)
            if (k != g.block_of(uv.u) && k != g.block_of(uv.v))
                others.push_back(k);
        const auto k = others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
        EdgeDeletePlan plan{uv.u, uv.v, k, {}};
        for (auto x : g.block(k)) {
            const auto end = std::bernoulli_distribution(0.5)(rng) ? uv.u : uv.v;
            plan.F.push_back(make_edge(end, x));
        }
        ++tried;
        CHECK_FALSE(oracle::has_it(edge_delete(g, plan)));
    }
    CHECK(tried == 300);
}
