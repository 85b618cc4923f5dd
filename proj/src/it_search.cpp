#include "itcraft/error.hpp"
#include "itcraft/transversal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace itcraft {

namespace {

    struct BudgetHit {
    };

    // Node and wall-clock accounting shared by the searches in this file.
    class Meter {
    public:
        explicit Meter(const SearchBudget& budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

        void tick()
        {
            if (++nodes_ > budget_.max_nodes)
                throw BudgetHit{};
            if (budget_.time_limit && (nodes_ & 0xfff) == 0
                && std::chrono::steady_clock::now() - start_ > *budget_.time_limit)
                throw BudgetHit{};
        }

        std::uint64_t nodes() const { return nodes_; }

    private:
        SearchBudget budget_;
        std::chrono::steady_clock::time_point start_;
        std::uint64_t nodes_ = 0;
    };

    struct VertexListHash {
        std::size_t operator()(const std::vector<Vertex>& key) const noexcept
        {
            std::size_t h = key.size();
            for (auto v : key)
                h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    class ItSearch {
    public:
        ItSearch(const PartitionedGraph& g, const SearchBudget& budget, const SearchScope& scope) :
            g_(g),
            meter_(budget),
            kill_(g.n(), 0),
            live_(g.r(), 0),
            in_play_(g.r(), 1),
            pick_(g.r(), kNoVertex),
            stamp_(g.r(), 0),
            parent_(g.r(), 0)
        {
            for (auto b : scope.excluded_blocks)
                in_play_.at(static_cast<std::size_t>(b)) = 0;
            for (auto v : scope.forbidden_vertices)
                kill_.at(static_cast<std::size_t>(v)) = 1;
            for (std::size_t b = 0; b < g.r(); ++b)
                for (auto v : g.blocks()[b])
                    if (kill_[static_cast<std::size_t>(v)] == 0)
                        ++live_[b];
        }

        ItResult run()
        {
            ItResult result;
            std::vector<BlockIndex> blocks;
            for (std::size_t b = 0; b < g_.r(); ++b)
                if (in_play_[b])
                    blocks.push_back(static_cast<BlockIndex>(b));
            try {
                const bool ok = std::all_of(blocks.begin(), blocks.end(), [&](BlockIndex b) { return live(b) > 0; })
                    && solve(blocks);
                result.status = ok ? SearchStatus::Found : SearchStatus::None;
                if (ok) {
                    Transversal t(g_.r());
                    for (auto b : blocks)
                        t.assign(b, pick_[static_cast<std::size_t>(b)]);
                    result.transversal = std::move(t);
                }
            }
            catch (const BudgetHit&) {
                result.status = SearchStatus::BudgetExceeded;
            }
            result.nodes = meter_.nodes();
            return result;
        }

    private:
        int live(BlockIndex b) const { return live_[static_cast<std::size_t>(b)]; }
        bool is_live(Vertex v) const { return kill_[static_cast<std::size_t>(v)] == 0; }

        // Picks v for its block. Returns false if some unassigned block lost
        // its last candidate; the assignment stays on the trail either way.
        bool assign(Vertex v)
        {
            const auto b = static_cast<std::size_t>(g_.block_of(v));
            pick_[b] = v;
            in_play_[b] = 0;
            trail_.push_back(v);
            bool ok = true;
            for (auto u : g_.neighbors(v))
                if (kill_[static_cast<std::size_t>(u)]++ == 0) {
                    const auto c = static_cast<std::size_t>(g_.block_of(u));
                    if (--live_[c] == 0 && in_play_[c])
                        ok = false;
                }
            return ok;
        }

        void undo_to(std::size_t mark)
        {
            while (trail_.size() > mark) {
                const auto v = trail_.back();
                trail_.pop_back();
                for (auto u : g_.neighbors(v))
                    if (--kill_[static_cast<std::size_t>(u)] == 0)
                        ++live_[static_cast<std::size_t>(g_.block_of(u))];
                const auto b = static_cast<std::size_t>(g_.block_of(v));
                pick_[b] = kNoVertex;
                in_play_[b] = 1;
            }
        }

        void mark_set(const std::vector<BlockIndex>& blocks)
        {
            ++epoch_;
            for (auto b : blocks)
                stamp_[static_cast<std::size_t>(b)] = epoch_;
        }

        bool in_set(BlockIndex b) const
        {
            return stamp_[static_cast<std::size_t>(b)] == epoch_ && in_play_[static_cast<std::size_t>(b)];
        }

        // A live candidate none of whose live neighbours sit in another open block.
        Vertex free_candidate(BlockIndex b) const
        {
            for (auto v : g_.block(b)) {
                if (!is_live(v))
                    continue;
                const auto& nb = g_.neighbors(v);
                if (std::none_of(nb.begin(), nb.end(),
                        [&](Vertex u) { return is_live(u) && g_.block_of(u) != b && in_set(g_.block_of(u)); }))
                    return v;
            }
            return kNoVertex;
        }

        BlockIndex find_root(BlockIndex b)
        {
            while (parent_[static_cast<std::size_t>(b)] != b) {
                auto& p = parent_[static_cast<std::size_t>(b)];
                p = parent_[static_cast<std::size_t>(p)];
                b = p;
            }
            return b;
        }

        std::vector<std::vector<BlockIndex>> split(const std::vector<BlockIndex>& blocks)
        {
            mark_set(blocks);
            for (auto b : blocks)
                parent_[static_cast<std::size_t>(b)] = b;
            for (auto b : blocks)
                for (auto v : g_.block(b)) {
                    if (!is_live(v))
                        continue;
                    for (auto u : g_.neighbors(v)) {
                        const auto c = g_.block_of(u);
                        if (c != b && is_live(u) && in_set(c)) {
                            auto rb = find_root(b), rc = find_root(c);
                            if (rb != rc)
                                parent_[static_cast<std::size_t>(std::max(rb, rc))] = std::min(rb, rc);
                        }
                    }
                }
            std::vector<std::vector<BlockIndex>> parts;
            std::vector<int> slot(g_.r(), -1);
            for (auto b : blocks) {
                auto root = static_cast<std::size_t>(find_root(b));
                if (slot[root] < 0) {
                    slot[root] = static_cast<int>(parts.size());
                    parts.emplace_back();
                }
                parts[static_cast<std::size_t>(slot[root])].push_back(b);
            }
            std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
            return parts;
        }

        // Every block in `blocks` is open; their residual instance is independent
        // of every other open block.
        bool solve(std::vector<BlockIndex> blocks)
        {
            const auto mark = trail_.size();

            for (bool changed = true; changed && !blocks.empty();) {
                changed = false;
                mark_set(blocks);
                for (std::size_t i = 0; i < blocks.size();) {
                    const auto b = blocks[i];
                    if (live(b) == 0) {
                        undo_to(mark);
                        return false;
                    }
                    if (auto v = free_candidate(b); v != kNoVertex) {
                        assign(v);
                        blocks[i] = blocks.back();
                        blocks.pop_back();
                        changed = true;
                    }
                    else
                        ++i;
                }
            }
            if (blocks.empty())
                return true;

            for (auto& part : split(blocks))
                if (!solve_connected(std::move(part))) {
                    undo_to(mark);
                    return false;
                }
            return true;
        }

        std::vector<Vertex> residual_key(std::vector<BlockIndex>& part) const
        {
            std::sort(part.begin(), part.end());
            std::vector<Vertex> key;
            for (auto b : part)
                for (auto v : g_.block(b))
                    if (is_live(v))
                        key.push_back(v);
            return key;
        }

        bool solve_connected(std::vector<BlockIndex> part)
        {
            auto key = residual_key(part);
            if (failed_.count(key))
                return false;

            const auto chosen = *std::min_element(part.begin(), part.end(), [&](BlockIndex a, BlockIndex b) {
                return live(a) != live(b) ? live(a) < live(b) : a < b;
            });
            std::vector<BlockIndex> rest;
            rest.reserve(part.size() - 1);
            for (auto b : part)
                if (b != chosen)
                    rest.push_back(b);

            for (auto v : g_.block(chosen)) {
                if (!is_live(v))
                    continue;
                meter_.tick();
                const auto mark = trail_.size();
                if (assign(v) && solve(rest))
                    return true;
                undo_to(mark);
            }
            if (failed_.size() < kCacheLimit)
                failed_.insert(std::move(key));
            return false;
        }

        static constexpr std::size_t kCacheLimit = 2'000'000;

        const PartitionedGraph& g_;
        Meter meter_;
        std::vector<int> kill_;
        std::vector<int> live_;
        std::vector<char> in_play_;
        std::vector<Vertex> pick_;
        std::vector<Vertex> trail_;
        std::vector<unsigned> stamp_;
        unsigned epoch_ = 0;
        std::vector<BlockIndex> parent_;
        std::unordered_set<std::vector<Vertex>, VertexListHash> failed_;
    };

} // namespace

std::size_t Transversal::size() const
{
    return static_cast<std::size_t>(std::count_if(pick_.begin(), pick_.end(), [](Vertex v) { return v != kNoVertex; }));
}

std::vector<Vertex> Transversal::vertices() const
{
    std::vector<Vertex> out;
    for (auto v : pick_)
        if (v != kNoVertex)
            out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Transversal Transversal::from_vertices(const PartitionedGraph& g, std::span<const Vertex> vs)
{
    Transversal t(g.r());
    for (auto v : vs) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n())
            throw Error(ErrorCode::InvalidArgument, "vertex outside the graph");
        if (t.assigned(g.block_of(v)))
            throw Error(ErrorCode::InvalidArgument, "two vertices in one block");
        t.assign(g.block_of(v), v);
    }
    return t;
}

bool is_valid_partial(const PartitionedGraph& g, const Transversal& t)
{
    if (t.r() != g.r())
        return false;
    std::vector<Vertex> chosen;
    for (std::size_t b = 0; b < g.r(); ++b) {
        const auto v = t.picks()[b];
        if (v == kNoVertex)
            continue;
        if (v < 0 || static_cast<std::size_t>(v) >= g.n() || g.block_of(v) != static_cast<BlockIndex>(b))
            return false;
        chosen.push_back(v);
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if (g.adjacent(chosen[i], chosen[j]))
                return false;
    return true;
}

std::size_t degree_into(const PartitionedGraph& g, const Transversal& t, Vertex w)
{
    std::size_t d = 0;
    for (auto v : t.picks())
        if (v != kNoVertex && g.adjacent(v, w))
            ++d;
    return d;
}

ItResult find_it(const PartitionedGraph& g, const SearchBudget& budget, const SearchScope& scope)
{
    return ItSearch(g, budget, scope).run();
}

CountResult count_its(const PartitionedGraph& g, const SearchBudget& budget)
{
    Meter meter(budget);
    std::vector<int> kill(g.n(), 0);
    std::function<std::uint64_t(std::size_t)> count = [&](std::size_t b) -> std::uint64_t {
        if (b == g.r())
            return 1;
        std::uint64_t total = 0;
        for (auto v : g.blocks()[b]) {
            if (kill[static_cast<std::size_t>(v)])
                continue;
            meter.tick();
            for (auto u : g.neighbors(v))
                ++kill[static_cast<std::size_t>(u)];
            total += count(b + 1);
            for (auto u : g.neighbors(v))
                --kill[static_cast<std::size_t>(u)];
        }
        return total;
    };
    CountResult result;
    try {
        result.count = count(0);
    }
    catch (const BudgetHit&) {
    }
    result.nodes = meter.nodes();
    return result;
}

Tri is_block_minimal(const PartitionedGraph& g, const SearchBudget& budget)
{
    const auto whole = find_it(g, budget);
    if (whole.status == SearchStatus::BudgetExceeded)
        return Tri::BudgetExceeded;
    if (whole.status == SearchStatus::Found)
        return Tri::False;
    for (std::size_t b = 0; b < g.r(); ++b) {
        const auto part = find_it(g, budget, SearchScope{{static_cast<BlockIndex>(b)}, {}});
        if (part.status == SearchStatus::BudgetExceeded)
            return Tri::BudgetExceeded;
        if (part.status == SearchStatus::None)
            return Tri::False;
    }
    return Tri::True;
}

} // namespace itcraft
