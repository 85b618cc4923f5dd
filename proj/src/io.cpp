#include "itcraft/io.hpp"

#include "itcraft/error.hpp"

#include <fstream>
#include <sstream>

namespace itcraft {

using nlohmann::json;

json graph_to_json(const PartitionedGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    json blocks = json::array();
    for (const auto& blk : g.blocks())
        blocks.push_back(blk);
    json out = {{"version", 1}, {"n", g.n()}, {"edges", std::move(edges)}, {"blocks", std::move(blocks)}};
    if (g.has_labels()) {
        json labels = json::object();
        for (std::size_t v = 0; v < g.n(); ++v)
            if (!g.labels()[v].empty())
                labels[std::to_string(v)] = g.labels()[v];
        out["labels"] = std::move(labels);
    }
    return out;
}

PartitionedGraph graph_from_json(const json& j)
{
    try {
        if (!j.is_object())
            throw Error(ErrorCode::Malformed, "graph JSON must be an object");
        if (j.value("version", 1) != 1)
            throw Error(ErrorCode::Malformed, "unsupported graph version");
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::Malformed, "edges must be pairs");
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        auto blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels.resize(n);
            for (const auto& [key, value] : j.at("labels").items()) {
                std::size_t pos = 0;
                const auto v = std::stoul(key, &pos);
                if (pos != key.size() || v >= n)
                    throw Error(ErrorCode::Malformed, "bad label key '" + key + "'");
                labels[v] = value.get<std::string>();
            }
        }
        return {n, std::move(edges), std::move(blocks), std::move(labels)};
    }
    catch (const json::exception& e) {
        throw Error(ErrorCode::Malformed, std::string("graph JSON: ") + e.what());
    }
    catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Malformed, "graph JSON: non-numeric label key");
    }
}

std::string canonical_string(const PartitionedGraph& g) { return graph_to_json(g).dump(); }

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
    try {
        return json::parse(in);
    }
    catch (const json::exception& e) {
        throw Error(ErrorCode::Malformed, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << text;
}

void write_json_file(const std::filesystem::path& path, const json& j) { write_text_file(path, j.dump() + "\n"); }

} // namespace itcraft
