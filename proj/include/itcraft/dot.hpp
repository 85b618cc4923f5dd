#pragma once

#include "itcraft/core.hpp"

#include <string>

namespace itcraft {

/// Graphviz source: one cluster per block, nodes filled by component.
std::string to_dot(const PartitionedGraph& g);

} // namespace itcraft
