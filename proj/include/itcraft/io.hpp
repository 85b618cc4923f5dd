#pragma once

#include "itcraft/core.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace itcraft {

/// Canonical graph form:
/// {"version":1, "n":N, "edges":[[u,v],...], "blocks":[[...],...], "labels":{"v":"..."}}
/// Edges have u < v and are sorted; blocks are ascending and ordered by their
/// minimum member; "labels" is present only when some vertex is labeled.
nlohmann::json graph_to_json(const PartitionedGraph& g);
PartitionedGraph graph_from_json(const nlohmann::json& j);

/// Compact serialization of graph_to_json; equal graphs give equal bytes.
std::string canonical_string(const PartitionedGraph& g);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace itcraft
