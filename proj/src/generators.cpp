#include "itcraft/construct.hpp"

#include "itcraft/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

namespace itcraft {

namespace {

    std::string tag(const char* name, std::size_t i) { return std::string(name) + std::to_string(i) + "/"; }

    std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

    void require(bool ok, ErrorCode code, const std::string& msg)
    {
        if (!ok)
            throw Error(code, msg);
    }

    // First member of every block, in block order. Vertex ids survive the
    // state-side joins used below, so these locate the blocks later on.
    std::vector<Vertex> block_reps(const PartitionedGraph& g)
    {
        std::vector<Vertex> reps;
        for (const auto& b : g.blocks())
            reps.push_back(b.front());
        return reps;
    }

    CertifiedBuilder build_szabo_tardos(std::size_t d)
    {
        require(d >= 1, ErrorCode::InvalidArgument, "d must be at least 1");
        const auto unit = gen_complete_bipartite(d, d);
        const auto width = static_cast<Vertex>(2 * d);
        CertifiedBuilder b(with_label_prefix(unit, tag("copy", 0)));
        std::size_t copy = 1;
        for (Vertex start : {Vertex{0}, static_cast<Vertex>(d)}) {
            Vertex rep = start;
            for (std::size_t k = 1; k < d; ++k) {
                const auto& g = b.graph();
                const auto u = g.block_of(rep);
                Distribution dist;
                std::size_t picked = 0;
                Vertex last_copy = -1;
                for (auto v : g.block(u)) {
                    // copies occupy consecutive id ranges, so ascending order groups them
                    const bool first_of_copy = v / width != last_copy;
                    last_copy = v / width;
                    dist[v] = first_of_copy ? 0 : 1;
                    picked += first_of_copy;
                }
                if (picked != k || g.block(u).size() - picked != d - 1)
                    throw Error(ErrorCode::InvariantViolated, "unexpected small block shape");
                const auto offset = static_cast<Vertex>(g.n());
                b.join_state(with_label_prefix(unit, tag("copy", copy++)), u, std::move(dist));
                rep = offset;
            }
        }
        return b;
    }

    struct CycleBuild {
        CertifiedBuilder builder;
        std::vector<Vertex> reps; // V_1 .. V_{r+1}
    };

    CycleBuild build_cycle(std::size_t r)
    {
        require(r >= 1, ErrorCode::InvalidArgument, "r must be at least 1");
        PartitionedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}, {1, 3}}, {"C4/0", "C4/1", "C4/2", "C4/3"});
        CycleBuild cb{CertifiedBuilder(c4), {0, 1}};
        const auto path = gen_complete_bipartite(2, 1); // leaves 0,1 in block 0; centre 2 in block 1
        for (std::size_t step = 2; step <= r; ++step) {
            auto& b = cb.builder;
            const auto offset = static_cast<Vertex>(b.graph().n());
            const auto target = b.graph().block_of(cb.reps[step - 2]);
            b.join_added(with_label_prefix(path, tag("path", step - 1)), 1, Distribution{{2, target}});
            const auto e = b.graph().edges().front();
            const Vertex leaf0 = offset, leaf1 = offset + 1;
            b.edge_delete({e.u, e.v, b.graph().block_of(leaf0), {{e.u, leaf0}, {e.v, leaf1}}});
            cb.reps.push_back(leaf0);
        }
        return cb;
    }

    // The two size-2 blocks of a cycle partition, lower index first.
    std::pair<BlockIndex, BlockIndex> pair_blocks(const PartitionedGraph& g)
    {
        std::vector<BlockIndex> small;
        for (std::size_t b = 0; b < g.r(); ++b)
            if (g.blocks()[b].size() == 2)
                small.push_back(static_cast<BlockIndex>(b));
        if (small.size() != 2)
            throw Error(ErrorCode::InvariantViolated, "cycle partition without exactly two pair blocks");
        return {small[0], small[1]};
    }

    // Vertices of U ordered by component, then id; spread round robin.
    Distribution round_robin_by_component(const PartitionedGraph& g, BlockIndex u, std::size_t targets)
    {
        const auto cid = component_ids(g);
        auto order = g.block(u);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return cid[static_cast<std::size_t>(a)] < cid[static_cast<std::size_t>(b)];
        });
        Distribution dist;
        for (std::size_t i = 0; i < order.size(); ++i)
            dist[order[i]] = static_cast<BlockIndex>(i % targets);
        return dist;
    }

} // namespace

PartitionedGraph gen_complete_bipartite(std::size_t a, std::size_t b)
{
    require(a >= 1 && b >= 1, ErrorCode::InvalidArgument, "both sides need at least one vertex");
    std::vector<Edge> edges;
    std::vector<Vertex> left, right;
    std::vector<std::string> labels;
    const auto name = "K" + std::to_string(a) + "," + std::to_string(b) + "/";
    for (std::size_t i = 0; i < a; ++i) {
        left.push_back(static_cast<Vertex>(i));
        labels.push_back(name + "left/" + std::to_string(i));
    }
    for (std::size_t j = 0; j < b; ++j) {
        right.push_back(static_cast<Vertex>(a + j));
        labels.push_back(name + "right/" + std::to_string(j));
    }
    for (auto u : left)
        for (auto v : right)
            edges.push_back({u, v});
    return {a + b, std::move(edges), {left, right}, std::move(labels)};
}

Construction gen_szabo_tardos(std::size_t d)
{
    auto b = build_szabo_tardos(d);
    return {b.graph(), b.certificate()};
}

std::vector<std::size_t> colorful_components(const PartitionedGraph& g)
{
    const auto comps = components(g);
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c].vertices.size() != g.r())
            continue;
        std::vector<char> seen(g.r(), 0);
        bool ok = true;
        for (auto v : comps[c].vertices)
            ok = ok && !std::exchange(seen[static_cast<std::size_t>(g.block_of(v))], 1);
        if (ok)
            out.push_back(c);
    }
    return out;
}

Construction gen_yuster(std::size_t d)
{
    require(d >= 1 && (d & (d - 1)) == 0, ErrorCode::NotPowerOfTwo, "d must be a power of two");
    const auto unit = gen_complete_bipartite(d, d);
    CertifiedBuilder b(with_label_prefix(unit, tag("copy", 0)));
    for (std::size_t copy = 1; copy + 1 < 2 * d; ++copy) {
        const auto& g = b.graph();
        BlockIndex u = 0;
        for (std::size_t i = 1; i < g.r(); ++i)
            if (g.blocks()[i].size() < g.block(u).size())
                u = static_cast<BlockIndex>(i);
        const auto& members = g.block(u);
        const auto half = (members.size() + 1) / 2;
        Distribution dist;
        for (std::size_t i = 0; i < members.size(); ++i)
            dist[members[i]] = i < half ? 0 : 1;
        b.join_state(with_label_prefix(unit, tag("copy", copy)), u, std::move(dist));
    }
    return {b.graph(), b.certificate()};
}

Construction gen_cycle_partition(std::size_t r)
{
    auto cb = build_cycle(r);
    return {cb.builder.graph(), cb.builder.certificate()};
}

Construction gen_three_cycles(std::size_t l1, std::size_t l2, std::size_t l3)
{
    for (auto l : {l1, l2, l3})
        require(l >= 4 && l % 3 == 1, ErrorCode::BadLength,
            "cycle length " + std::to_string(l) + " is not 1 mod 3 and at least 4");
    auto cb = build_cycle((l1 - 1) / 3);
    auto& b = cb.builder;
    const auto x1 = cb.reps[cb.reps.size() - 2];
    const auto x2 = cb.reps.back();

    std::size_t idx = 1;
    for (auto [len, rep] : {std::pair{l2, x1}, std::pair{l3, x2}}) {
        const auto other = with_label_prefix(gen_cycle_partition((len - 1) / 3).graph, tag("cycle", idx++));
        const auto [y1, y2] = pair_blocks(other);
        const auto u = b.graph().block_of(rep);
        const auto& members = b.graph().block(u);
        b.join_state(other, u, Distribution{{members[0], y1}, {members[1], y2}});
    }
    return {b.graph(), b.certificate()};
}

PartitionedGraph gen_multipartite_base(std::size_t r, std::size_t m)
{
    require(r >= 2 && m >= 1, ErrorCode::InvalidArgument, "need r >= 2 and m >= 1");
    const auto n = (r - 1) * r * m;
    auto id = [&](std::size_t c, std::size_t p, std::size_t t) { return static_cast<Vertex>(c * r * m + p * m + t); };
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> blocks(r);
    std::vector<std::string> labels(n);
    const auto name = "K" + std::to_string(r) + "(" + std::to_string(m) + ")/";
    for (std::size_t c = 0; c + 1 < r; ++c)
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t t = 0; t < m; ++t) {
                const auto v = id(c, p, t);
                blocks[p].push_back(v);
                labels[static_cast<std::size_t>(v)]
                    = "copy" + std::to_string(c) + "/" + name + "part" + std::to_string(p) + "/" + std::to_string(t);
                for (std::size_t q = p + 1; q < r; ++q)
                    for (std::size_t s = 0; s < m; ++s)
                        edges.push_back({v, id(c, q, s)});
            }
    return {n, std::move(edges), std::move(blocks), std::move(labels)};
}

Construction gen_locally_sparse(std::size_t d, std::size_t m)
{
    require(m >= 1 && d >= m, ErrorCode::InvalidArgument, "need d >= m >= 1");
    require(d % m == 0, ErrorCode::NotDivisible, "m must divide d");
    const auto r = d / m + 1;
    const auto unit = gen_multipartite_base(r, m);
    auto b = build_szabo_tardos(d);
    const auto reps = block_reps(b.graph());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto u = b.graph().block_of(reps[j]);
        b.join_state(with_label_prefix(unit, tag("sparse", j)), u, round_robin_by_component(b.graph(), u, r));
    }
    return {b.graph(), b.certificate()};
}

Construction gen_list_coloring_cx(std::size_t d)
{
    require(d >= 2, ErrorCode::InvalidArgument, "d must be at least 2");
    const auto kdd = gen_complete_bipartite(d, d);
    CertifiedBuilder b(with_label_prefix(gen_complete_bipartite(2, 2), tag("copy", 0)));
    // K_{2,2} sides {0,1} and {2,3}: each side is split across a fresh K_{d,d}
    b.join_state(with_label_prefix(kdd, tag("copy", 1)), b.graph().block_of(0), Distribution{{0, 0}, {1, 1}});
    b.join_state(with_label_prefix(kdd, tag("copy", 2)), b.graph().block_of(2), Distribution{{2, 0}, {3, 1}});

    const auto cliques = gen_multipartite_base(d + 1, 1);
    auto reps = block_reps(b.graph());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto u = b.graph().block_of(reps[j]);
        b.join_state(with_label_prefix(cliques, tag("sparse", j)), u, round_robin_by_component(b.graph(), u, d + 1));
    }

    std::vector<Vertex> doomed;
    for (const auto& blk : b.graph().blocks())
        for (std::size_t i = d + 1; i < blk.size(); ++i)
            doomed.push_back(blk[i]);
    if (!doomed.empty())
        b.delete_vertices(doomed);

    reps = block_reps(b.graph());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto u = b.graph().block_of(reps[j]);
        Distribution dist;
        const auto& members = b.graph().block(u);
        for (std::size_t i = 0; i < members.size(); ++i)
            dist[members[i]] = static_cast<BlockIndex>(i);
        b.join_state(with_label_prefix(cliques, tag("cover", j)), u, std::move(dist));
    }
    return {b.graph(), b.certificate()};
}

StarFreeConstruction gen_star_free_cx(std::size_t k, std::size_t m)
{
    require(k >= 3 && m >= 1, ErrorCode::InvalidArgument, "need k >= 3 and m >= 1");
    require(m % (k - 1) == 0, ErrorCode::NotDivisible, "k-1 must divide m");
    auto b = build_szabo_tardos(m);
    const auto size = m / (k - 1);
    std::vector<Edge> extra;
    for (const auto& comp : components(b.graph()))
        for (const auto* side : {&comp.side_a, &comp.side_b})
            for (std::size_t start = 0; start < side->size(); start += size)
                for (std::size_t i = start; i < start + size; ++i)
                    for (std::size_t j = i + 1; j < start + size; ++j)
                        extra.push_back({(*side)[i], (*side)[j]});
    b.add_edges(std::move(extra));

    StarFreeReport report;
    report.d = k * m / (k - 1) - 1;
    report.block_size = 2 * m - 1;
    report.bound = report.d + k - 1;
    report.counterexample = report.block_size > report.bound;
    return {b.graph(), b.certificate(), report};
}

Construction gen_ahhs_cx(std::size_t d)
{
    require(d >= 2, ErrorCode::InvalidArgument, "d must be at least 2");
    const auto unit = gen_complete_bipartite(d, d - 1);
    auto b = build_szabo_tardos(d);
    const auto reps = block_reps(b.graph());
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto& g = b.graph();
        const auto u = g.block_of(reps[j]);
        const auto cid = component_ids(g);
        std::map<std::size_t, std::size_t> count;
        for (auto v : g.block(u))
            ++count[cid[static_cast<std::size_t>(v)]];
        std::optional<std::size_t> heavy;
        for (const auto& [c, n] : count)
            if (n == d) {
                if (heavy)
                    throw Error(ErrorCode::InvariantViolated, "two components meet the block in d vertices");
                heavy = c;
            }
        if (!heavy)
            throw Error(ErrorCode::InvariantViolated, "no component meets the block in d vertices");
        Distribution dist;
        std::size_t sent = 0;
        for (auto v : g.block(u)) {
            const bool to_a = cid[static_cast<std::size_t>(v)] == *heavy && sent < d - 1;
            sent += to_a;
            dist[v] = to_a ? 0 : 1;
        }
        b.join_state(with_label_prefix(unit, tag("ahhs", j)), u, std::move(dist));
    }
    return {b.graph(), b.certificate()};
}

JoinPowerConstruction gen_join_power(const PartitionedGraph& seed, std::size_t n, std::size_t min_copies,
    const SearchBudget& budget)
{
    require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
    require(check_block_sum_condition(seed, n), ErrorCode::ConditionFails, "seed fails the block-sum condition");
    switch (find_it(seed, budget).status) {
    case SearchStatus::Found:
        throw Error(ErrorCode::SeedHasIT, "seed has an independent transversal");
    case SearchStatus::BudgetExceeded:
        throw Error(ErrorCode::BudgetExceeded, "could not decide whether the seed has an independent transversal");
    case SearchStatus::None:
        break;
    }

    const auto sizes = seed.block_sizes();
    std::vector<BlockIndex> J;
    std::size_t in_j = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < n) {
            J.push_back(static_cast<BlockIndex>(i));
            in_j += sizes[i];
        }
    BlockIndex j = J.empty() ? 0 : J.front();
    for (auto i : J)
        if (sizes[static_cast<std::size_t>(i)] < sizes[static_cast<std::size_t>(j)])
            j = i;

    JoinPowerReport report;
    report.formula_copies = 1;
    if (!J.empty()) {
        const auto denom = in_j - n * (J.size() - 1);
        for (auto i : J)
            report.formula_copies += ceil_div(n - sizes[static_cast<std::size_t>(i)], denom);
    }

    auto distribute = [&](const std::vector<Vertex>& members) {
        Distribution dist;
        std::size_t pos = 0;
        for (auto i : J) {
            if (i == j)
                continue;
            for (std::size_t t = sizes[static_cast<std::size_t>(i)]; t < n; ++t) {
                if (pos + 1 >= members.size())
                    throw Error(ErrorCode::InvariantViolated, "small block too small to distribute");
                dist[members[pos++]] = i;
            }
        }
        for (; pos < members.size(); ++pos)
            dist[members[pos]] = j;
        return dist;
    };

    CertifiedBuilder b(with_label_prefix(seed, tag("copy", 0)));
    std::size_t copies = 1;
    std::optional<Vertex> fresh;
    const auto j_rep = seed.block(j).front();
    while (true) {
        const auto& g = b.graph();
        std::optional<BlockIndex> u;
        if (fresh && g.block(g.block_of(*fresh)).size() < n)
            u = g.block_of(*fresh);
        else
            for (std::size_t i = 0; i < g.r(); ++i)
                if (g.blocks()[i].size() < n && (!u || g.blocks()[i].size() < g.block(*u).size()))
                    u = static_cast<BlockIndex>(i);
        if (!u)
            break;
        const auto offset = static_cast<Vertex>(g.n());
        b.join_state(with_label_prefix(seed, tag("copy", copies++)), *u, distribute(g.block(*u)));
        fresh = offset + j_rep;
    }
    const auto procedure = copies;
    while (copies < min_copies) {
        const auto& g = b.graph();
        BlockIndex u = 0;
        for (std::size_t i = 1; i < g.r(); ++i)
            if (g.blocks()[i].size() > g.block(u).size())
                u = static_cast<BlockIndex>(i);
        b.join_state(with_label_prefix(seed, tag("copy", copies++)), u, distribute(g.block(u)));
    }
    report.copies = copies;
    report.padding = copies - procedure;
    report.matches_formula = procedure == report.formula_copies;
    return {b.graph(), b.certificate(), report};
}

JoinPowerConstruction gen_general_szabo_tardos(std::size_t n, std::size_t r)
{
    require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
    require(r >= 2 && r % 2 == 0, ErrorCode::InvalidArgument, "r must be even and at least 2");
    const auto d = ceil_div(r * n, 2 * (r - 1));
    auto out = gen_join_power(gen_complete_bipartite(d, d), n, r - 1);
    if (out.report.copies != r - 1)
        throw Error(ErrorCode::InvariantViolated, "join power needed more than r-1 copies");
    return out;
}

JoinPowerConstruction gen_complete_multipartite(std::size_t r, std::size_t m)
{
    require(r >= 2 && m >= 1, ErrorCode::InvalidArgument, "need r >= 2 and m >= 1");
    return gen_join_power(gen_multipartite_base(r, m), r * m - 1);
}

std::size_t complete_multipartite_copies(std::size_t r, std::size_t m)
{
    return (r - 1) * (1 + r * ceil_div(m - 1, r - 1));
}

Construction gen_random_kdd_joins(std::size_t d, std::size_t copies, std::uint64_t seed)
{
    require(d >= 1 && copies >= 1, ErrorCode::InvalidArgument, "need d >= 1 and at least one copy");
    std::mt19937_64 rng(seed);
    const auto unit = gen_complete_bipartite(d, d);
    CertifiedBuilder b(with_label_prefix(unit, tag("copy", 0)));
    for (std::size_t c = 1; c < copies; ++c) {
        const auto payload = with_label_prefix(unit, tag("copy", c));
        const auto& g = b.graph();
        if (rng() % 2 == 0) {
            const auto u = static_cast<BlockIndex>(rng() % g.r());
            Distribution dist;
            for (auto v : g.block(u))
                dist[v] = static_cast<BlockIndex>(rng() % 2);
            b.join_state(payload, u, std::move(dist));
        }
        else {
            const auto s = static_cast<BlockIndex>(rng() % 2);
            Distribution dist;
            for (auto v : payload.block(s))
                dist[v] = static_cast<BlockIndex>(rng() % g.r());
            b.join_added(payload, s, std::move(dist));
        }
    }
    return {b.graph(), b.certificate()};
}

} // namespace itcraft
