#include "itcraft/listcover.hpp"

#include "itcraft/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace itcraft {

namespace {

    [[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

    std::vector<std::size_t> offsets(const ListInstance& inst)
    {
        std::vector<std::size_t> off(inst.n + 1, 0);
        for (std::size_t x = 0; x < inst.n; ++x)
            off[x + 1] = off[x] + inst.lists[x].size();
        return off;
    }

    bool has_color(const std::vector<Color>& list, Color c) { return std::binary_search(list.begin(), list.end(), c); }

    // Vertices of each component grouped by block, blocks ascending.
    std::vector<std::map<BlockIndex, std::vector<Vertex>>> by_block(const PartitionedGraph& g)
    {
        const auto comps = components(g);
        std::vector<std::map<BlockIndex, std::vector<Vertex>>> out(comps.size());
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (auto v : comps[c].vertices)
                out[c][g.block_of(v)].push_back(v);
        return out;
    }

    using Signature = std::pair<std::vector<BlockIndex>, std::vector<std::pair<BlockIndex, BlockIndex>>>;

    std::vector<Signature> signatures(const PartitionedGraph& g)
    {
        if (stats(g).multiplicity > 1)
            bad("block-respecting isomorphism needs multiplicity 1");
        const auto cid = component_ids(g);
        std::vector<Signature> sig(components(g).size());
        for (std::size_t v = 0; v < g.n(); ++v)
            sig[cid[v]].first.push_back(g.block_of(static_cast<Vertex>(v)));
        for (const auto& e : g.edges()) {
            auto a = g.block_of(e.u), b = g.block_of(e.v);
            sig[cid[static_cast<std::size_t>(e.u)]].second.emplace_back(std::min(a, b), std::max(a, b));
        }
        for (auto& s : sig) {
            std::sort(s.first.begin(), s.first.end());
            std::sort(s.second.begin(), s.second.end());
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    }

} // namespace

ListInstance normalized(ListInstance inst)
{
    if (inst.lists.size() != inst.n)
        bad("need one list per vertex");
    for (auto& l : inst.lists) {
        if (l.empty())
            bad("empty color list");
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (auto& e : inst.edges) {
        if (e.u == e.v)
            bad("loop in list instance");
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(std::max(e.u, e.v)) >= inst.n)
            bad("edge endpoint out of range");
        e = make_edge(e.u, e.v);
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    if (std::adjacent_find(inst.edges.begin(), inst.edges.end()) != inst.edges.end())
        bad("duplicate edge in list instance");
    return inst;
}

PartitionedGraph cover_graph(const ListInstance& raw)
{
    const auto inst = normalized(raw);
    const auto off = offsets(inst);
    std::vector<std::vector<Vertex>> blocks(inst.n);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < inst.n; ++x)
        for (std::size_t k = 0; k < inst.lists[x].size(); ++k) {
            blocks[x].push_back(static_cast<Vertex>(off[x] + k));
            labels.push_back(std::to_string(x) + "/" + std::to_string(inst.lists[x][k]));
        }
    std::vector<Edge> edges;
    for (const auto& e : inst.edges) {
        const auto x = static_cast<std::size_t>(e.u), y = static_cast<std::size_t>(e.v);
        const auto& lx = inst.lists[x];
        const auto& ly = inst.lists[y];
        for (std::size_t k = 0; k < lx.size(); ++k) {
            auto it = std::lower_bound(ly.begin(), ly.end(), lx[k]);
            if (it != ly.end() && *it == lx[k])
                edges.push_back(make_edge(static_cast<Vertex>(off[x] + k),
                    static_cast<Vertex>(off[y] + static_cast<std::size_t>(it - ly.begin()))));
        }
    }
    return PartitionedGraph(off.back(), std::move(edges), std::move(blocks), std::move(labels));
}

Vertex cover_vertex(const ListInstance& raw, std::size_t x, Color c)
{
    const auto inst = normalized(raw);
    if (x >= inst.n)
        bad("vertex out of range");
    const auto& l = inst.lists[x];
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it == l.end() || *it != c)
        bad("color not in the list");
    return static_cast<Vertex>(offsets(inst)[x] + static_cast<std::size_t>(it - l.begin()));
}

CoverConditions check_list_cover_conditions(const PartitionedGraph& g)
{
    CoverConditions out;
    out.a = stats(g).multiplicity <= 1;
    out.b = true;

    // For each block pair: 0 = seen only nonadjacent, 1 = seen only adjacent.
    std::map<std::pair<BlockIndex, BlockIndex>, int> seen;
    for (const auto& comp : by_block(g)) {
        for (auto i = comp.begin(); i != comp.end() && out.b; ++i)
            for (auto j = i; j != comp.end() && out.b; ++j) {
                std::size_t pairs = 0, hits = 0;
                for (auto v : i->second)
                    for (auto w : j->second) {
                        if (v == w || (i == j && w < v))
                            continue;
                        ++pairs;
                        hits += g.adjacent(v, w);
                    }
                if (pairs == 0)
                    continue;
                if (hits != 0 && hits != pairs) {
                    out.b = false;
                    break;
                }
                const int state = hits != 0;
                auto [it, fresh] = seen.emplace(std::make_pair(i->first, j->first), state);
                if (!fresh && it->second != state)
                    out.b = false;
            }
        if (!out.b)
            break;
    }
    return out;
}

ListInstance recover_instance(const PartitionedGraph& g)
{
    const auto cond = check_list_cover_conditions(g);
    if (!cond.a || !cond.b)
        throw Error(ErrorCode::NotCoverGraph,
            std::string("graph is not a list cover graph: condition ") + (!cond.a ? "(a)" : "(b)") + " fails");
    ListInstance inst;
    inst.n = g.r();
    inst.lists.resize(g.r());
    const auto cid = component_ids(g);
    for (std::size_t v = 0; v < g.n(); ++v)
        inst.lists[static_cast<std::size_t>(g.block_of(static_cast<Vertex>(v)))].push_back(static_cast<Color>(cid[v]));
    for (auto& l : inst.lists)
        std::sort(l.begin(), l.end());
    std::set<Edge> h;
    for (const auto& e : g.edges())
        h.insert(make_edge(g.block_of(e.u), g.block_of(e.v)));
    inst.edges.assign(h.begin(), h.end());
    return inst;
}

std::vector<Color> it_to_coloring(const ListInstance& raw, const Transversal& t)
{
    const auto inst = normalized(raw);
    if (t.r() != inst.n || !t.is_full())
        throw Error(ErrorCode::Invalid, "transversal is not full on the cover graph");
    const auto off = offsets(inst);
    std::vector<Color> phi(inst.n);
    for (std::size_t x = 0; x < inst.n; ++x) {
        const auto v = t.at(static_cast<BlockIndex>(x));
        if (v < 0 || static_cast<std::size_t>(v) < off[x] || static_cast<std::size_t>(v) >= off[x + 1])
            throw Error(ErrorCode::Invalid, "pick for vertex " + std::to_string(x) + " lies outside its block");
        phi[x] = inst.lists[x][static_cast<std::size_t>(v) - off[x]];
    }
    for (const auto& e : inst.edges)
        if (phi[static_cast<std::size_t>(e.u)] == phi[static_cast<std::size_t>(e.v)])
            throw Error(ErrorCode::Invalid,
                "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " share a color");
    return phi;
}

std::size_t max_color_degree(const ListInstance& raw)
{
    const auto inst = normalized(raw);
    std::vector<std::vector<std::size_t>> deg(inst.n);
    for (std::size_t x = 0; x < inst.n; ++x)
        deg[x].assign(inst.lists[x].size(), 0);
    for (const auto& e : inst.edges) {
        const auto x = static_cast<std::size_t>(e.u), y = static_cast<std::size_t>(e.v);
        for (std::size_t k = 0; k < inst.lists[x].size(); ++k)
            deg[x][k] += has_color(inst.lists[y], inst.lists[x][k]);
        for (std::size_t k = 0; k < inst.lists[y].size(); ++k)
            deg[y][k] += has_color(inst.lists[x], inst.lists[y][k]);
    }
    std::size_t best = 0;
    for (const auto& d : deg)
        for (auto v : d)
            best = std::max(best, v);
    return best;
}

bool isomorphic_respecting_blocks(const PartitionedGraph& g, const PartitionedGraph& h)
{
    if (g.n() != h.n() || g.r() != h.r() || g.edge_count() != h.edge_count() || g.block_sizes() != h.block_sizes())
        return false;
    return signatures(g) == signatures(h);
}

nlohmann::json instance_to_json(const ListInstance& raw)
{
    const auto inst = normalized(raw);
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = inst.n;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : inst.edges)
        j["edges"].push_back({e.u, e.v});
    j["lists"] = inst.lists;
    return j;
}

ListInstance instance_from_json(const nlohmann::json& j)
{
    ListInstance inst;
    try {
        if (!j.is_object() || j.at("version").get<int>() != 1)
            throw Error(ErrorCode::Malformed, "list instance needs an object with version 1");
        inst.n = j.at("n").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::Malformed, "edges must be pairs");
            inst.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        inst.lists = j.at("lists").get<std::vector<std::vector<Color>>>();
    }
    catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Malformed, std::string("list instance JSON: ") + e.what());
    }
    try {
        return normalized(std::move(inst));
    }
    catch (const Error& e) {
        throw Error(ErrorCode::Malformed, e.what());
    }
}

} // namespace itcraft
