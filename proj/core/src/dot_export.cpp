#include "ismkit/dot_export.hpp"

#include <algorithm>
#include <set>

namespace ismkit {

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Label strings keep their backslashes so "\n" line breaks survive.
std::string label_quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string node_label(const std::string& id, const FactorCatalog* catalog) {
    if (catalog) {
        if (const Factor* factor = catalog->find(id))
            return id + "\\n" + factor->short_name;
    }
    return id;
}

} // namespace

std::string digraph_dot(const Digraph& graph, const FactorCatalog* catalog) {
    std::string out;
    out += "digraph ism {\n";
    out += "  rankdir=TB;\n";
    out += "  node [shape=box];\n";

    std::size_t level_count = 0;
    for (std::size_t level : graph.node_levels)
        level_count = std::max(level_count, level);

    for (std::size_t level = 1; level <= level_count; ++level) {
        out += "  subgraph cluster_level" + std::to_string(level) + " {\n";
        out += "    label=\"Level " + std::to_string(level) + "\";\n";
        out += "    rank=same;\n";
        for (std::size_t i = 0; i < graph.node_ids.size(); ++i) {
            if (graph.node_levels[i] != level)
                continue;
            out += "    " + quoted(graph.node_ids[i]) +
                   " [label=" + label_quoted(node_label(graph.node_ids[i], catalog)) + "];\n";
        }
        out += "  }\n";
    }

    for (const auto& edge : graph.edges)
        out += "  " + quoted(edge.from) + " -> " + quoted(edge.to) + ";\n";
    out += "}\n";
    return out;
}

std::string mapping_dot(const TaxonomyMapping& mapping, const FactorCatalog& catalog) {
    std::set<std::string> sources, targets;
    for (const auto& edge : mapping.edges) {
        sources.insert(edge.source);
        targets.insert(edge.target);
    }

    // Emit nodes in catalog order so the output does not depend on the
    // edge order of the mapping file.
    std::string out;
    out += "digraph taxonomy {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=box];\n";

    out += "  subgraph cluster_factors {\n";
    out += "    label=\"Motivators and demotivators\";\n";
    for (const auto& factor : catalog.factors())
        if (sources.count(factor.id))
            out += "    " + quoted(factor.id) +
                   " [label=" + label_quoted(factor.id + "\\n" + factor.short_name) + "];\n";
    // Sources the catalog does not know still need a node.
    for (const auto& id : sources)
        if (!catalog.contains(id))
            out += "    " + quoted(id) + ";\n";
    out += "  }\n";

    out += "  subgraph cluster_principles {\n";
    out += "    label=\"Principles\";\n";
    for (const auto& factor : catalog.factors())
        if (targets.count(factor.id))
            out += "    " + quoted(factor.id) +
                   " [label=" + label_quoted(factor.id + "\\n" + factor.short_name) + "];\n";
    for (const auto& id : targets)
        if (!catalog.contains(id))
            out += "    " + quoted(id) + ";\n";
    out += "  }\n";

    for (const auto& edge : mapping.edges) {
        out += "  " + quoted(edge.source) + " -> " + quoted(edge.target);
        out += edge.polarity == Polarity::Supports ? " [style=solid];\n" : " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ismkit
