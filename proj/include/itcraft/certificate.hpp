#pragma once

#include "itcraft/core.hpp"
#include "itcraft/transforms.hpp"

#include <json.hpp>

#include <variant>
#include <vector>

namespace itcraft {

/// Which side of a join gives up a block. With Added the payload's block s is
/// spread over the current graph's blocks (dist keys are payload ids); with
/// State the current graph's block s is spread over the payload's blocks (dist
/// keys are current ids). Current vertex ids never change under a join; the
/// payload is appended after them.
enum class Dissolve { Added, State };

struct BaseStep {
    PartitionedGraph graph;
};

struct JoinStep {
    PartitionedGraph added;
    BlockIndex s = 0;
    Distribution dist;
    Dissolve dissolve = Dissolve::Added;
};

struct EdgeDeleteStep {
    EdgeDeletePlan plan;
};

struct AddEdgesStep {
    std::vector<Edge> extra;
};

struct DeleteVerticesStep {
    std::vector<Vertex> doomed;
};

struct BlowUpStep {
    std::size_t m = 1;
};

using CertStep = std::variant<BaseStep, JoinStep, EdgeDeleteStep, AddEdgesStep, DeleteVerticesStep, BlowUpStep>;

/// Replayable derivation of a graph with no IT. `relabel`, when present, maps
/// each replayed vertex id to the id it has in the graph being certified.
struct Certificate {
    int version = 1;
    std::vector<CertStep> steps;
    std::vector<Vertex> relabel;
};

/// Step kind as it appears in JSON ("base", "join", ...).
std::string step_kind(const CertStep& step);

/// Applies a non-base step. Throws the transform's own error on a bad step.
PartitionedGraph apply_step(const PartitionedGraph& state, const CertStep& step);

nlohmann::json certificate_to_json(const Certificate& cert);
/// Throws Error(Malformed) on anything that does not parse as a certificate.
Certificate certificate_from_json(const nlohmann::json& j);

/// Builds a graph and its certificate together, one step at a time.
class CertifiedBuilder {
public:
    explicit CertifiedBuilder(PartitionedGraph base);

    const PartitionedGraph& graph() const noexcept { return state_; }
    const Certificate& certificate() const noexcept { return cert_; }

    /// Payload block s is dissolved into the current blocks.
    void join_added(const PartitionedGraph& payload, BlockIndex s, Distribution dist);
    /// Current block s is dissolved into the payload blocks.
    void join_state(const PartitionedGraph& payload, BlockIndex s, Distribution dist);
    void edge_delete(EdgeDeletePlan plan);
    void add_edges(std::vector<Edge> extra);
    void delete_vertices(std::vector<Vertex> doomed);
    void blow_up(std::size_t m);

private:
    void push(CertStep step);

    PartitionedGraph state_;
    Certificate cert_;
};

} // namespace itcraft
