#include "itcraft/error.hpp"
#include "itcraft/transversal.hpp"

#include <algorithm>
#include <functional>

namespace itcraft {

namespace {

    struct BudgetHit {
    };

    class NodeMeter {
    public:
        explicit NodeMeter(const SearchBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

        void tick()
        {
            if (++nodes_ > budget_.max_nodes)
                throw BudgetHit{};
            if (budget_.time_limit && (nodes_ & 0x3ff) == 0
                && std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
                throw BudgetHit{};
        }

    private:
        SearchBudget budget_;
        std::chrono::steady_clock::time_point start_;
        std::uint64_t nodes_ = 0;
    };

    struct Prepared {
        Transversal base;              // the forced part, size r
        std::vector<char> allowed;     // vertex may be added
        std::vector<BlockIndex> free;  // blocks without a forced vertex, ascending
        std::size_t forced_degree = 0; // forced vertices adjacent to the degree target
    };

    Prepared prepare(const PartitionedGraph& g, const PartialItRequest& req)
    {
        Prepared p;
        if (req.forced.r() == 0)
            p.base = Transversal(g.r());
        else if (req.forced.r() == g.r())
            p.base = req.forced;
        else
            throw Error(ErrorCode::InvalidConstraint, "forced transversal has the wrong block count");
        if (!is_valid_partial(g, p.base))
            throw Error(ErrorCode::InvalidConstraint, "forced transversal is not a valid partial transversal");

        p.allowed.assign(g.n(), 1);
        for (auto v : req.forbidden_vertices) {
            if (v < 0 || static_cast<std::size_t>(v) >= g.n())
                throw Error(ErrorCode::InvalidConstraint, "forbidden vertex out of range");
            p.allowed[static_cast<std::size_t>(v)] = 0;
        }
        for (auto v : p.base.vertices()) {
            if (!p.allowed[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::InvalidConstraint, "forced vertex " + std::to_string(v) + " is forbidden");
            for (auto u : g.neighbors(v))
                p.allowed[static_cast<std::size_t>(u)] = 0;
        }
        for (std::size_t b = 0; b < g.r(); ++b) {
            if (p.base.assigned(static_cast<BlockIndex>(b))) {
                for (auto v : g.blocks()[b])
                    p.allowed[static_cast<std::size_t>(v)] = 0;
            }
            else
                p.free.push_back(static_cast<BlockIndex>(b));
        }
        if (req.minimize_degree_of) {
            const auto w = *req.minimize_degree_of;
            if (w < 0 || static_cast<std::size_t>(w) >= g.n())
                throw Error(ErrorCode::InvalidConstraint, "degree target out of range");
            p.forced_degree = degree_into(g, p.base, w);
        }
        return p;
    }

    // Disjoint union of complete bipartite graphs. Once a side is fixed for every
    // component, any choice of one available vertex per block is independent,
    // and since each vertex serves exactly one block the block/vertex matching
    // reduces to counting blocks with an available vertex.
    Transversal solve_cb(const PartitionedGraph& g, const PartialItRequest& req, const Prepared& p, NodeMeter& meter)
    {
        const auto comps = components(g);
        const auto cid = component_ids(g);
        std::vector<char> side(g.n(), 0);
        for (const auto& c : comps)
            for (auto v : c.side_b)
                side[static_cast<std::size_t>(v)] = 1;

        auto allowed = [&](Vertex v) { return p.allowed[static_cast<std::size_t>(v)] != 0; };

        // Vertices adjacent to the degree target all sit on the far side of its component.
        std::vector<char> hits_target(g.n(), 0);
        if (req.minimize_degree_of)
            for (auto u : g.neighbors(*req.minimize_degree_of))
                hits_target[static_cast<std::size_t>(u)] = 1;

        std::vector<int> avail(g.r(), 0), avail_hit(g.r(), 0), potential(g.r(), 0);
        std::vector<std::size_t> decision;
        // chosen side per component; -1 = both sides usable trivially (only one has allowed vertices)
        std::vector<int> choice(comps.size(), -1);

        auto add_side = [&](const std::vector<Vertex>& vs, int delta) {
            for (auto v : vs)
                if (allowed(v)) {
                    const auto b = static_cast<std::size_t>(g.block_of(v));
                    avail[b] += delta;
                    if (hits_target[static_cast<std::size_t>(v)])
                        avail_hit[b] += delta;
                }
        };
        auto add_potential = [&](const Component& c, int delta) {
            for (auto v : c.vertices)
                if (allowed(v))
                    potential[static_cast<std::size_t>(g.block_of(v))] += delta;
        };

        for (std::size_t c = 0; c < comps.size(); ++c) {
            const auto& comp = comps[c];
            const bool a = std::any_of(comp.side_a.begin(), comp.side_a.end(), allowed);
            const bool b = std::any_of(comp.side_b.begin(), comp.side_b.end(), allowed);
            if (a && b) {
                decision.push_back(c);
                add_potential(comp, 1);
            }
            else if (a) {
                choice[c] = 0;
                add_side(comp.side_a, 1);
            }
            else if (b) {
                choice[c] = 1;
                add_side(comp.side_b, 1);
            }
        }

        long best_size = -1;
        std::size_t best_degree = 0;
        std::vector<int> best_choice;

        auto evaluate = [&](std::size_t& degree) {
            long size = 0;
            degree = 0;
            for (auto b : p.free) {
                const auto i = static_cast<std::size_t>(b);
                if (avail[i] > 0) {
                    ++size;
                    if (avail[i] == avail_hit[i])
                        ++degree;
                }
            }
            return size;
        };

        std::function<void(std::size_t)> dfs = [&](std::size_t k) {
            meter.tick();
            long bound = 0;
            for (auto b : p.free) {
                const auto i = static_cast<std::size_t>(b);
                if (avail[i] + potential[i] > 0)
                    ++bound;
            }
            if (bound < best_size || (bound == best_size && best_degree == 0))
                return;
            if (k == decision.size()) {
                std::size_t degree = 0;
                const auto size = evaluate(degree);
                if (size > best_size || (size == best_size && degree < best_degree)) {
                    best_size = size;
                    best_degree = degree;
                    best_choice = choice;
                }
                return;
            }
            const auto& comp = comps[decision[k]];
            add_potential(comp, -1);
            for (int s = 0; s < 2; ++s) {
                const auto& vs = s == 0 ? comp.side_a : comp.side_b;
                choice[decision[k]] = s;
                add_side(vs, 1);
                dfs(k + 1);
                add_side(vs, -1);
            }
            choice[decision[k]] = -1;
            add_potential(comp, 1);
        };
        dfs(0);

        Transversal out = p.base;
        for (auto b : p.free) {
            Vertex pick = kNoVertex, fallback = kNoVertex;
            for (auto v : g.block(b)) {
                const auto c = best_choice[cid[static_cast<std::size_t>(v)]];
                if (!allowed(v) || c != side[static_cast<std::size_t>(v)])
                    continue;
                if (!hits_target[static_cast<std::size_t>(v)]) {
                    pick = v;
                    break;
                }
                if (fallback == kNoVertex)
                    fallback = v;
            }
            if (pick == kNoVertex)
                pick = fallback;
            if (pick != kNoVertex)
                out.assign(b, pick);
        }
        return out;
    }

    Transversal solve_generic(const PartitionedGraph& g, const PartialItRequest& req, const Prepared& p, NodeMeter& meter)
    {
        std::vector<int> kill(g.n(), 0);
        std::vector<char> hits_target(g.n(), 0);
        if (req.minimize_degree_of)
            for (auto u : g.neighbors(*req.minimize_degree_of))
                hits_target[static_cast<std::size_t>(u)] = 1;

        auto usable = [&](Vertex v) {
            return p.allowed[static_cast<std::size_t>(v)] && kill[static_cast<std::size_t>(v)] == 0;
        };

        Transversal cur = p.base, best = p.base;
        long best_size = -1;
        std::size_t best_degree = 0;

        std::function<void(std::size_t, long, std::size_t)> dfs = [&](std::size_t k, long size, std::size_t degree) {
            meter.tick();
            long bound = size;
            for (std::size_t j = k; j < p.free.size(); ++j) {
                const auto& blk = g.block(p.free[j]);
                if (std::any_of(blk.begin(), blk.end(), usable))
                    ++bound;
            }
            if (bound < best_size || (bound == best_size && degree >= best_degree))
                return;
            if (k == p.free.size()) {
                best_size = size;
                best_degree = degree;
                best = cur;
                return;
            }
            const auto b = p.free[k];
            for (auto v : g.block(b)) {
                if (!usable(v))
                    continue;
                cur.assign(b, v);
                for (auto u : g.neighbors(v))
                    ++kill[static_cast<std::size_t>(u)];
                dfs(k + 1, size + 1, degree + hits_target[static_cast<std::size_t>(v)]);
                for (auto u : g.neighbors(v))
                    --kill[static_cast<std::size_t>(u)];
                cur.clear(b);
            }
            dfs(k + 1, size, degree);
        };
        dfs(0, 0, 0);
        return best;
    }

    Transversal run(const PartitionedGraph& g, const PartialItRequest& req, const SearchBudget& budget, bool generic)
    {
        const auto p = prepare(g, req);
        NodeMeter meter(budget);
        try {
            if (!generic && is_cb_union(g))
                return solve_cb(g, req, p, meter);
            return solve_generic(g, req, p, meter);
        }
        catch (const BudgetHit&) {
            throw Error(ErrorCode::BudgetExceeded, "maximum partial transversal search exceeded its budget");
        }
    }

} // namespace

Transversal max_partial_it(const PartitionedGraph& g, const PartialItRequest& request, const SearchBudget& budget)
{
    return run(g, request, budget, false);
}

Transversal max_partial_it_generic(const PartitionedGraph& g, const PartialItRequest& request, const SearchBudget& budget)
{
    return run(g, request, budget, true);
}

} // namespace itcraft
