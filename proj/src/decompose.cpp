#include "itcraft/decompose.hpp"

#include "itcraft/error.hpp"

#include <algorithm>

namespace itcraft {

namespace {

    [[noreturn]] void violated(const std::string& what) { throw Error(ErrorCode::InvariantViolated, what); }

    std::vector<Vertex> sorted(std::vector<Vertex> v)
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    bool inside_block(const PartitionedGraph& g, const std::vector<Vertex>& side, BlockIndex b)
    {
        return !side.empty() && std::all_of(side.begin(), side.end(), [&](Vertex v) { return g.block_of(v) == b; });
    }

    std::optional<BlockIndex> common_block(const PartitionedGraph& g, const std::vector<Vertex>& side)
    {
        if (side.empty() || !inside_block(g, side, g.block_of(side.front())))
            return std::nullopt;
        return g.block_of(side.front());
    }

    // (ii) of a feasible pair: G[I] is a disjoint union of nontrivial stars,
    // one centred at each w in I \ T, whose leaves are the T-neighbours of w.
    void check_stars(const PartitionedGraph& g, const std::vector<char>& in_i, const std::vector<char>& in_t)
    {
        std::vector<int> centre_hits(g.n(), 0);
        for (std::size_t w = 0; w < g.n(); ++w) {
            if (!in_i[w] || in_t[w])
                continue;
            std::size_t leaves = 0;
            for (auto u : g.neighbors(static_cast<Vertex>(w))) {
                const auto x = static_cast<std::size_t>(u);
                if (in_t[x]) {
                    if (!in_i[x])
                        violated("a T-neighbour of a star centre lies outside I");
                    ++leaves;
                    ++centre_hits[x];
                }
                else if (in_i[x])
                    violated("two star centres are adjacent");
            }
            if (leaves == 0)
                violated("trivial star in I");
        }
        for (std::size_t t = 0; t < g.n(); ++t)
            if (in_i[t] && in_t[t] && centre_hits[t] != 1)
                violated("a vertex of T inside I is not a leaf of exactly one star");
    }

    Component oriented(const PartitionedGraph& g, const std::vector<Component>& comps, std::size_t c, Vertex pivot,
        SideInBlock& out)
    {
        (void)g;
        const auto& comp = comps[c];
        const bool pivot_in_a = std::binary_search(comp.side_a.begin(), comp.side_a.end(), pivot);
        out.component = c;
        out.inside = pivot_in_a ? comp.side_b : comp.side_a;
        out.outside = pivot_in_a ? comp.side_a : comp.side_b;
        return comp;
    }

} // namespace

Abc check_abc(const PartitionedGraph& g, const SearchBudget& budget)
{
    Abc out;
    const auto a = is_block_minimal(g, budget);
    if (a == Tri::BudgetExceeded)
        throw Error(ErrorCode::BudgetExceeded, "block-minimality check ran out of budget");
    out.a = a == Tri::True;
    out.b = is_cb_union(g);
    out.c = stats(g).component_count + 1 == g.r();
    return out;
}

ImcWitness build_imc(const PartitionedGraph& g, BlockIndex root, const SearchBudget& budget)
{
    if (root < 0 || static_cast<std::size_t>(root) >= g.r())
        throw Error(ErrorCode::InvalidArgument, "root block out of range");
    if (!is_cb_union(g) || stats(g).component_count + 1 != g.r())
        throw Error(ErrorCode::PreconditionFailed, "graph is not a union of r-1 complete bipartite components");

    const auto start = find_it(g, budget, SearchScope{{root}, {}});
    if (start.status == SearchStatus::BudgetExceeded)
        throw Error(ErrorCode::BudgetExceeded, "no budget left for the initial transversal");
    if (start.status == SearchStatus::None)
        throw Error(ErrorCode::PreconditionFailed, "deleting the root block leaves no IT");

    const auto r = g.r();
    Transversal T = *start.transversal;
    std::vector<char> in_i(g.n(), 0);
    std::vector<Vertex> I;
    ImcWitness out;
    out.root = root;

    while (true) {
        // pick w
        Vertex w = kNoVertex;
        if (I.empty())
            w = g.block(root).front();
        else {
            std::vector<char> active(r, 0);
            for (auto v : I)
                active[static_cast<std::size_t>(g.block_of(v))] = 1;
            for (std::size_t v = 0; v < g.n() && w == kNoVertex; ++v) {
                if (in_i[v] || !active[static_cast<std::size_t>(g.block_of(static_cast<Vertex>(v)))])
                    continue;
                const auto& nb = g.neighbors(static_cast<Vertex>(v));
                if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in_i[static_cast<std::size_t>(u)]; }))
                    w = static_cast<Vertex>(v);
            }
        }
        if (w == kNoVertex)
            break;

        PartialItRequest req;
        req.forced = Transversal(r);
        req.minimize_degree_of = w;
        std::vector<char> active(r, 0), forbidden(g.n(), 0);
        for (auto v : I)
            active[static_cast<std::size_t>(g.block_of(v))] = 1;
        for (std::size_t b = 0; b < r; ++b) {
            if (!active[b])
                continue;
            const auto t = T.at(static_cast<BlockIndex>(b));
            if (t != kNoVertex)
                req.forced.assign(static_cast<BlockIndex>(b), t);
            else
                for (auto v : g.blocks()[b])
                    forbidden[static_cast<std::size_t>(v)] = 1;
        }
        for (auto v : I)
            for (auto u : g.neighbors(v))
                if (!in_i[static_cast<std::size_t>(u)])
                    forbidden[static_cast<std::size_t>(u)] = 1;
        if (!active[static_cast<std::size_t>(g.block_of(w))])
            for (auto v : g.block(g.block_of(w)))
                forbidden[static_cast<std::size_t>(v)] = 1;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (forbidden[v])
                req.forbidden_vertices.push_back(static_cast<Vertex>(v));

        Transversal next;
        try {
            next = max_partial_it(g, req, budget);
        }
        catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidConstraint)
                violated(std::string("current transversal breaks its own constraints: ") + e.what());
            throw;
        }
        if (next.size() != r - 1)
            violated("constrained transversal is not maximum");

        std::vector<Vertex> star{w};
        for (auto u : g.neighbors(w))
            if (next.assigned(g.block_of(u)) && next.at(g.block_of(u)) == u)
                star.push_back(u);
        if (star.size() == 1)
            violated("trivial star at vertex " + std::to_string(w));

        const auto before = I.size();
        for (auto v : star)
            if (!in_i[static_cast<std::size_t>(v)]) {
                in_i[static_cast<std::size_t>(v)] = 1;
                I.push_back(v);
            }
        if (I.size() <= before)
            violated("I did not grow");
        T = std::move(next);
        out.growth.push_back(I.size());

        std::vector<char> in_t(g.n(), 0);
        for (auto v : T.vertices())
            in_t[static_cast<std::size_t>(v)] = 1;
        check_stars(g, in_i, in_t);
        if (!block_graph(g, sorted(I)).is_tree())
            violated("block graph of I is not a tree");
    }

    std::sort(I.begin(), I.end());
    auto bg = block_graph(g, I);
    if (bg.active.size() != r)
        violated("some block is inactive at the end");
    if (!bg.is_tree())
        violated("final block graph is not a tree");
    std::vector<char> in_t(g.n(), 0);
    for (auto v : T.vertices()) {
        if (!in_i[static_cast<std::size_t>(v)])
            violated("T is not contained in I");
        in_t[static_cast<std::size_t>(v)] = 1;
    }
    if (T.assigned(root))
        violated("root block meets T");
    for (std::size_t v = 0; v < g.n(); ++v) {
        std::size_t in_nb = 0;
        for (auto u : g.neighbors(static_cast<Vertex>(v)))
            in_nb += in_i[static_cast<std::size_t>(u)];
        if (in_nb != 1)
            violated("vertex " + std::to_string(v) + " has " + std::to_string(in_nb) + " neighbours in I");
    }
    std::size_t w_count = 0;
    for (auto v : I) {
        if (in_t[static_cast<std::size_t>(v)])
            continue;
        ++w_count;
        std::size_t deg = 0;
        for (auto u : g.neighbors(v))
            deg += in_t[static_cast<std::size_t>(u)];
        if (deg != 1)
            violated("a star centre has T-degree other than 1");
    }
    if (w_count + 1 != r)
        violated("|I \\ T| is not r-1");

    out.pair = FeasiblePair{std::move(I), std::move(T)};
    out.block_graph = std::move(bg);
    return out;
}

std::optional<SideInBlock> scan_side_in_block(const PartitionedGraph& g, BlockIndex i)
{
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        if (!comp.complete_bipartite || comp.side_b.empty())
            continue;
        for (bool a_first : {true, false}) {
            const auto& in = a_first ? comp.side_a : comp.side_b;
            if (inside_block(g, in, i)) {
                SideInBlock out;
                out.component = c;
                out.inside = in;
                out.outside = a_first ? comp.side_b : comp.side_a;
                return out;
            }
        }
    }
    return std::nullopt;
}

SideInBlock find_side_in_block(const PartitionedGraph& g, BlockIndex i, const SearchBudget& budget)
{
    auto imc = build_imc(g, i, budget);
    const auto comps = components(g);
    const auto cid = component_ids(g);
    std::vector<char> in_i(g.n(), 0), in_t(g.n(), 0);
    for (auto v : imc.pair.I)
        in_i[static_cast<std::size_t>(v)] = 1;
    for (auto v : imc.pair.T.vertices())
        in_t[static_cast<std::size_t>(v)] = 1;

    auto matched = [&](Vertex w) {
        for (auto u : g.neighbors(w))
            if (in_i[static_cast<std::size_t>(u)])
                return u;
        violated("vertex without a partner in I");
    };

    SideInBlock out;
    auto I = imc.pair.I;
    auto degree = imc.block_graph.degree(i);
    while (true) {
        out.degree_trace.push_back(degree);
        std::vector<Vertex> here;
        for (auto v : I)
            if (g.block_of(v) == i)
                here.push_back(v);
        if (here.empty())
            violated("root block left the block graph");
        const auto w = here.front();
        if (in_t[static_cast<std::size_t>(w)])
            violated("root block meets T");
        const auto v = matched(w);
        const auto& nv = g.neighbors(v);
        const bool done = std::all_of(nv.begin(), nv.end(), [&](Vertex x) { return g.block_of(x) == i; });
        if (degree == 1 && !done)
            violated("leaf case: switched-out vertex has a neighbour outside the block");
        if (done) {
            oriented(g, comps, cid[static_cast<std::size_t>(v)], v, out);
            if (!inside_block(g, out.inside, i))
                violated("returned side is not inside the block");
            return out;
        }

        const auto x = *std::find_if(nv.begin(), nv.end(), [&](Vertex y) { return g.block_of(y) != i; });
        if (g.block_of(x) == g.block_of(v))
            violated("swap vertex lies in the partner's block");
        in_i[static_cast<std::size_t>(w)] = 0;
        in_i[static_cast<std::size_t>(x)] = 1;
        I.erase(std::find(I.begin(), I.end(), w));
        I.insert(std::lower_bound(I.begin(), I.end(), x), x);

        const auto bg = block_graph(g, I);
        if (!bg.is_tree() || bg.active.size() != g.r())
            violated("swap broke the induced matching configuration");
        for (auto y : I) {
            std::size_t k = 0;
            for (auto u : g.neighbors(y))
                k += in_i[static_cast<std::size_t>(u)];
            if (k != 1)
                violated("swap broke the perfect matching on I");
        }
        const auto next = bg.degree(i);
        if (next + 1 != degree)
            violated("swap did not lower the block degree by one");
        degree = next;
        ++out.swaps;
    }
}

std::optional<TwoBlockHit> find_two_block_component(const PartitionedGraph& g)
{
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        if (!comp.complete_bipartite || comp.side_b.empty())
            continue;
        const auto bi = common_block(g, comp.side_a), bj = common_block(g, comp.side_b);
        if (bi && bj && *bi != *bj)
            return TwoBlockHit{c, *bi, *bj};
    }
    return std::nullopt;
}

std::optional<TwoBlockHit> find_two_block_component_imc(const PartitionedGraph& g, const SearchBudget& budget)
{
    const auto comps = components(g);
    std::vector<std::optional<BlockIndex>> a_block(comps.size()), b_block(comps.size());
    for (std::size_t b = 0; b < g.r(); ++b) {
        const auto hit = find_side_in_block(g, static_cast<BlockIndex>(b), budget);
        const auto& comp = comps[hit.component];
        auto& slot = hit.inside == comp.side_a ? a_block[hit.component] : b_block[hit.component];
        slot = static_cast<BlockIndex>(b);
        if (a_block[hit.component] && b_block[hit.component])
            return TwoBlockHit{hit.component, *a_block[hit.component], *b_block[hit.component]};
    }
    return std::nullopt;
}

Certificate decompose_to_certificate(const PartitionedGraph& g, const SearchBudget& budget, bool use_imc)
{
    if (!check_abc(g, budget).all())
        throw Error(ErrorCode::PreconditionFailed, "graph does not satisfy conditions (a), (b), (c)");

    struct Peel {
        std::vector<Vertex> a, b;          // original ids
        std::vector<Vertex> rest_from_i;   // original ids of V' that came from A's block
        std::vector<Vertex> rest_from_j;
    };
    std::vector<Peel> peels;

    auto cur = g;
    std::vector<Vertex> orig(g.n());
    for (std::size_t v = 0; v < g.n(); ++v)
        orig[v] = static_cast<Vertex>(v);

    while (cur.r() > 2) {
        const auto hit = use_imc ? find_two_block_component_imc(cur, budget) : find_two_block_component(cur);
        if (!hit)
            violated("no component lies inside two blocks");
        const auto comp = components(cur)[hit->component];
        Peel p;
        std::vector<char> gone(cur.n(), 0);
        for (auto v : comp.side_a) {
            p.a.push_back(orig[static_cast<std::size_t>(v)]);
            gone[static_cast<std::size_t>(v)] = 1;
        }
        for (auto v : comp.side_b) {
            p.b.push_back(orig[static_cast<std::size_t>(v)]);
            gone[static_cast<std::size_t>(v)] = 1;
        }

        std::vector<Vertex> new_id(cur.n(), kNoVertex), next_orig;
        for (std::size_t v = 0; v < cur.n(); ++v)
            if (!gone[v]) {
                new_id[v] = static_cast<Vertex>(next_orig.size());
                next_orig.push_back(orig[v]);
            }
        std::vector<std::vector<Vertex>> blocks;
        std::vector<Vertex> merged;
        for (std::size_t b = 0; b < cur.r(); ++b) {
            const bool is_i = static_cast<BlockIndex>(b) == hit->i, is_j = static_cast<BlockIndex>(b) == hit->j;
            std::vector<Vertex> kept;
            for (auto v : cur.blocks()[b])
                if (!gone[static_cast<std::size_t>(v)]) {
                    kept.push_back(new_id[static_cast<std::size_t>(v)]);
                    if (is_i)
                        p.rest_from_i.push_back(orig[static_cast<std::size_t>(v)]);
                    if (is_j)
                        p.rest_from_j.push_back(orig[static_cast<std::size_t>(v)]);
                }
            if (is_i || is_j)
                merged.insert(merged.end(), kept.begin(), kept.end());
            else
                blocks.push_back(std::move(kept));
        }
        if (merged.empty())
            violated("merged block is empty");
        blocks.push_back(std::move(merged));
        std::vector<Edge> edges;
        for (const auto& e : cur.edges())
            if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)])
                edges.push_back({new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)]});
        std::vector<std::string> labels;
        if (cur.has_labels())
            for (auto v : next_orig)
                labels.push_back(g.label(v));
        cur = PartitionedGraph(next_orig.size(), std::move(edges), std::move(blocks), std::move(labels));
        orig = std::move(next_orig);
        peels.push_back(std::move(p));
    }

    if (!is_cb_union(cur) || stats(cur).component_count != 1)
        violated("remaining two-block graph is not a single complete bipartite component");

    Certificate cert;
    cert.steps.push_back(BaseStep{cur});
    // replay id -> original id, and its inverse
    std::vector<Vertex> replay_to_orig = orig;
    std::vector<Vertex> orig_to_replay(g.n(), kNoVertex);
    for (std::size_t v = 0; v < replay_to_orig.size(); ++v)
        orig_to_replay[static_cast<std::size_t>(replay_to_orig[v])] = static_cast<Vertex>(v);
    auto state = cur;

    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        const auto na = it->a.size(), nb = it->b.size();
        std::vector<Edge> edges;
        std::vector<Vertex> left, right;
        std::vector<std::string> labels;
        for (std::size_t x = 0; x < na; ++x) {
            left.push_back(static_cast<Vertex>(x));
            labels.push_back(g.label(it->a[x]));
        }
        for (std::size_t y = 0; y < nb; ++y) {
            right.push_back(static_cast<Vertex>(na + y));
            labels.push_back(g.label(it->b[y]));
        }
        for (auto u : left)
            for (auto v : right)
                edges.push_back({u, v});
        PartitionedGraph unit(na + nb, std::move(edges), {left, right}, std::move(labels));

        Distribution dist;
        for (auto v : it->rest_from_i)
            dist[orig_to_replay[static_cast<std::size_t>(v)]] = 0;
        for (auto v : it->rest_from_j)
            dist[orig_to_replay[static_cast<std::size_t>(v)]] = 1;
        const auto s = state.block_of(dist.begin()->first);

        JoinStep step{unit, s, std::move(dist), Dissolve::State};
        state = apply_step(state, step);
        cert.steps.push_back(std::move(step));

        const auto offset = replay_to_orig.size();
        for (std::size_t x = 0; x < na; ++x)
            replay_to_orig.push_back(it->a[x]);
        for (std::size_t y = 0; y < nb; ++y)
            replay_to_orig.push_back(it->b[y]);
        for (std::size_t v = offset; v < replay_to_orig.size(); ++v)
            orig_to_replay[static_cast<std::size_t>(replay_to_orig[v])] = static_cast<Vertex>(v);
    }
    cert.relabel = std::move(replay_to_orig);
    return cert;
}

} // namespace itcraft
