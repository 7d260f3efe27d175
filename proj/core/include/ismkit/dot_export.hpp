#pragma once

#include <string>

#include "ismkit/factor.hpp"
#include "ismkit/ism.hpp"

namespace ismkit {

// Graphviz source for the level digraph: one same-rank cluster per level
// (level 1 first, i.e. drawn at the top with rankdir=TB), then the edges
// in their stored order. Node labels show the short name when the catalog
// knows the id.
std::string digraph_dot(const Digraph& graph, const FactorCatalog* catalog = nullptr);

// Bipartite view of a taxonomy mapping: motivators/demotivators on the
// left, principles on the right, solid edges for "supports" and dashed
// for "hinders". Only factors that occur in the mapping are drawn.
std::string mapping_dot(const TaxonomyMapping& mapping, const FactorCatalog& catalog);

} // namespace ismkit
