#include "itcraft/dot.hpp"

#include <array>
#include <sstream>

namespace itcraft {

namespace {

    constexpr std::array<const char*, 12> kPalette{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
        "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

    std::string quoted(const std::string& s)
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + '"';
    }

} // namespace

std::string to_dot(const PartitionedGraph& g)
{
    const auto cid = component_ids(g);
    std::ostringstream os;
    os << "graph G {\n  node [style=filled, shape=circle];\n";
    for (std::size_t b = 0; b < g.r(); ++b) {
        os << "  subgraph cluster_" << b << " {\n    label=\"V" << b << "\";\n";
        for (auto v : g.blocks()[b]) {
            const auto text = g.has_labels() && !g.label(v).empty() ? g.label(v) : std::to_string(v);
            os << "    " << v << " [label=" << quoted(text) << ", fillcolor=\""
               << kPalette[cid[static_cast<std::size_t>(v)] % kPalette.size()] << "\"];\n";
        }
        os << "  }\n";
    }
    for (const auto& e : g.edges())
        os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace itcraft
