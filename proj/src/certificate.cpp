#include "itcraft/certificate.hpp"

#include "itcraft/error.hpp"
#include "itcraft/io.hpp"

namespace itcraft {

using nlohmann::json;

namespace {

    template <class... Ts>
    struct Overloaded : Ts... {
        using Ts::operator()...;
    };
    template <class... Ts>
    Overloaded(Ts...) -> Overloaded<Ts...>;

    json edges_json(const std::vector<Edge>& edges)
    {
        json out = json::array();
        for (const auto& e : edges)
            out.push_back({e.u, e.v});
        return out;
    }

    std::vector<Edge> edges_from(const json& j)
    {
        std::vector<Edge> out;
        for (const auto& e : j) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::Malformed, "edges must be pairs");
            out.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        return out;
    }

    CertStep step_from_json(const json& j)
    {
        const auto type = j.at("type").get<std::string>();
        if (type == "base")
            return BaseStep{graph_from_json(j.at("graph"))};
        if (type == "join") {
            JoinStep step{graph_from_json(j.at("added")), 0, {}, Dissolve::Added};
            if (j.contains("dissolve")) {
                const auto d = j.at("dissolve").get<std::string>();
                if (d == "state")
                    step.dissolve = Dissolve::State;
                else if (d != "added")
                    throw Error(ErrorCode::Malformed, "unknown dissolve side '" + d + "'");
            }
            if (j.contains("s"))
                step.s = j.at("s").get<BlockIndex>();
            else if (step.dissolve == Dissolve::Added)
                step.s = static_cast<BlockIndex>(step.added.r() - 1);
            else
                throw Error(ErrorCode::Malformed, "a state-side join needs an explicit s");
            for (const auto& [key, value] : j.at("dist").items()) {
                std::size_t used = 0;
                const auto v = std::stoi(key, &used);
                if (used != key.size())
                    throw Error(ErrorCode::Malformed, "bad distribution key '" + key + "'");
                step.dist[static_cast<Vertex>(v)] = value.get<BlockIndex>();
            }
            return step;
        }
        if (type == "edge_delete")
            return EdgeDeleteStep{
                {j.at("u").get<Vertex>(), j.at("v").get<Vertex>(), j.at("k").get<BlockIndex>(), edges_from(j.at("F"))}};
        if (type == "add_edges")
            return AddEdgesStep{edges_from(j.at("extra"))};
        if (type == "delete_vertices")
            return DeleteVerticesStep{j.at("doomed").get<std::vector<Vertex>>()};
        if (type == "blow_up") {
            const auto m = j.at("m").get<long long>();
            if (m < 1)
                throw Error(ErrorCode::Malformed, "blow-up factor must be positive");
            return BlowUpStep{static_cast<std::size_t>(m)};
        }
        throw Error(ErrorCode::Malformed, "unknown step type '" + type + "'");
    }

} // namespace

std::string step_kind(const CertStep& step)
{
    return std::visit(Overloaded{
                          [](const BaseStep&) { return std::string("base"); },
                          [](const JoinStep&) { return std::string("join"); },
                          [](const EdgeDeleteStep&) { return std::string("edge_delete"); },
                          [](const AddEdgesStep&) { return std::string("add_edges"); },
                          [](const DeleteVerticesStep&) { return std::string("delete_vertices"); },
                          [](const BlowUpStep&) { return std::string("blow_up"); },
                      },
        step);
}

PartitionedGraph apply_step(const PartitionedGraph& state, const CertStep& step)
{
    return std::visit(Overloaded{
                          [&](const BaseStep&) -> PartitionedGraph {
                              throw Error(ErrorCode::Malformed, "base step after the first position");
                          },
                          [&](const JoinStep& s) {
                              return s.dissolve == Dissolve::Added
                                  ? join(state, s.added, s.s, s.dist, JoinLayout::HostFirst)
                                  : join(s.added, state, s.s, s.dist, JoinLayout::AddedFirst);
                          },
                          [&](const EdgeDeleteStep& s) { return edge_delete(state, s.plan); },
                          [&](const AddEdgesStep& s) { return add_edges(state, s.extra); },
                          [&](const DeleteVerticesStep& s) { return delete_vertices(state, s.doomed); },
                          [&](const BlowUpStep& s) { return blow_up(state, s.m); },
                      },
        step);
}

json certificate_to_json(const Certificate& cert)
{
    json steps = json::array();
    for (const auto& step : cert.steps) {
        json j;
        j["type"] = step_kind(step);
        std::visit(Overloaded{
                       [&](const BaseStep& s) { j["graph"] = graph_to_json(s.graph); },
                       [&](const JoinStep& s) {
                           j["added"] = graph_to_json(s.added);
                           j["s"] = s.s;
                           json dist = json::object();
                           for (const auto& [v, b] : s.dist)
                               dist[std::to_string(v)] = b;
                           j["dist"] = std::move(dist);
                           if (s.dissolve == Dissolve::State)
                               j["dissolve"] = "state";
                       },
                       [&](const EdgeDeleteStep& s) {
                           j["u"] = s.plan.u;
                           j["v"] = s.plan.v;
                           j["k"] = s.plan.k;
                           j["F"] = edges_json(s.plan.F);
                       },
                       [&](const AddEdgesStep& s) { j["extra"] = edges_json(s.extra); },
                       [&](const DeleteVerticesStep& s) { j["doomed"] = s.doomed; },
                       [&](const BlowUpStep& s) { j["m"] = s.m; },
                   },
            step);
        steps.push_back(std::move(j));
    }
    json out = {{"version", cert.version}, {"steps", std::move(steps)}};
    if (!cert.relabel.empty())
        out["relabel"] = cert.relabel;
    return out;
}

Certificate certificate_from_json(const json& j)
{
    try {
        if (!j.is_object())
            throw Error(ErrorCode::Malformed, "certificate JSON must be an object");
        Certificate cert;
        cert.version = j.at("version").get<int>();
        if (cert.version != 1)
            throw Error(ErrorCode::Malformed, "unsupported certificate version");
        for (const auto& s : j.at("steps"))
            cert.steps.push_back(step_from_json(s));
        if (j.contains("relabel"))
            cert.relabel = j.at("relabel").get<std::vector<Vertex>>();
        return cert;
    }
    catch (const Error& e) {
        if (e.code() == ErrorCode::Malformed)
            throw;
        throw Error(ErrorCode::Malformed, std::string("certificate payload: ") + e.what());
    }
    catch (const std::exception& e) {
        throw Error(ErrorCode::Malformed, std::string("certificate JSON: ") + e.what());
    }
}

CertifiedBuilder::CertifiedBuilder(PartitionedGraph base) : state_(base)
{
    cert_.steps.push_back(BaseStep{std::move(base)});
}

void CertifiedBuilder::push(CertStep step)
{
    state_ = apply_step(state_, step);
    cert_.steps.push_back(std::move(step));
}

void CertifiedBuilder::join_added(const PartitionedGraph& payload, BlockIndex s, Distribution dist)
{
    push(JoinStep{payload, s, std::move(dist), Dissolve::Added});
}

void CertifiedBuilder::join_state(const PartitionedGraph& payload, BlockIndex s, Distribution dist)
{
    push(JoinStep{payload, s, std::move(dist), Dissolve::State});
}

void CertifiedBuilder::edge_delete(EdgeDeletePlan plan) { push(EdgeDeleteStep{std::move(plan)}); }

void CertifiedBuilder::add_edges(std::vector<Edge> extra) { push(AddEdgesStep{std::move(extra)}); }

void CertifiedBuilder::delete_vertices(std::vector<Vertex> doomed) { push(DeleteVerticesStep{std::move(doomed)}); }

void CertifiedBuilder::blow_up(std::size_t m) { push(BlowUpStep{m}); }

} // namespace itcraft
