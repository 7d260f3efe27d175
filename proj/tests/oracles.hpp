#pragma once

// Independent re-implementations used to cross-check the library. These
// deliberately take the slow, obvious route (set algebra, fixpoint
// multiplication, path search) so a bug in the production algorithms
// cannot hide in a shared helper.

#include <cstddef>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ismkit/ism.hpp"
#include "ismkit/reachability.hpp"

namespace oracle {

using Bool2d = std::vector<std::vector<bool>>;

inline Bool2d to_grid(const ismkit::ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    Bool2d grid(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            grid[i][j] = matrix.reaches(i, j);
    return grid;
}

// Boolean matrix product, repeated until nothing changes: R, R|R², ...
inline Bool2d closure_fixpoint(Bool2d grid) {
    const std::size_t n = grid.size();
    bool changed = true;
    while (changed) {
        changed = false;
        Bool2d next = grid;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (grid[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (grid[k][j] && !next[i][j]) {
                            next[i][j] = true;
                            changed = true;
                        }
        grid = std::move(next);
    }
    return grid;
}

// Closure of a matrix with the same origin bookkeeping the library
// promises: cells that were already 1 keep their origin, new ones are
// Transitive.
inline ismkit::ReachabilityMatrix closure_oracle(const ismkit::ReachabilityMatrix& matrix) {
    const std::size_t n = matrix.size();
    Bool2d closed = closure_fixpoint(to_grid(matrix));
    std::vector<ismkit::CellOrigin> cells(n * n, ismkit::CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (closed[i][j])
                cells[i * n + j] = ismkit::is_one(matrix.origin(i, j))
                                       ? matrix.origin(i, j)
                                       : ismkit::CellOrigin::Transitive;
    return ismkit::ReachabilityMatrix(matrix.factor_ids(), std::move(cells));
}

// Is there a path from source to target using the given edge set?
// Zero-length paths count (source == target reaches itself).
inline bool path_exists(const Bool2d& edges, std::size_t source, std::size_t target) {
    if (source == target) return true;
    const std::size_t n = edges.size();
    std::vector<bool> visited(n, false);
    std::queue<std::size_t> frontier;
    frontier.push(source);
    visited[source] = true;
    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop();
        for (std::size_t next = 0; next < n; ++next) {
            if (!edges[at][next] || visited[next]) continue;
            if (next == target) return true;
            visited[next] = true;
            frontier.push(next);
        }
    }
    return false;
}

// Straight-from-definition level extraction with std::set arithmetic:
// R(i) = what i reaches, A(i) = what reaches i, both restricted to the
// factors still in play; i joins the level when R∩A == R.
inline std::vector<std::vector<std::string>> partition_oracle(
    const ismkit::ReachabilityMatrix& closed) {
    const std::size_t n = closed.size();
    std::set<std::size_t> remaining;
    for (std::size_t i = 0; i < n; ++i)
        remaining.insert(i);

    std::vector<std::vector<std::string>> levels;
    while (!remaining.empty()) {
        std::vector<std::size_t> level;
        for (std::size_t i : remaining) {
            std::set<std::size_t> reach, ante;
            for (std::size_t j : remaining) {
                if (closed.reaches(i, j)) reach.insert(j);
                if (closed.reaches(j, i)) ante.insert(j);
            }
            std::set<std::size_t> both;
            for (std::size_t j : reach)
                if (ante.count(j)) both.insert(j);
            if (both == reach) level.push_back(i);
        }
        if (level.empty())
            return {};  // stalled; caller decides what that means
        std::vector<std::string> ids;
        for (std::size_t i : level) {
            ids.push_back(closed.factor_ids()[i]);
            remaining.erase(i);
        }
        levels.push_back(std::move(ids));
    }
    return levels;
}

// Random reflexive relation on n factors named F1..Fn.
inline ismkit::ReachabilityMatrix random_relation(std::mt19937& rng, std::size_t n,
                                                  double density) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back("F" + std::to_string(i + 1));
    std::bernoulli_distribution coin(density);
    std::vector<ismkit::CellOrigin> cells(n * n, ismkit::CellOrigin::Zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j)
                cells[i * n + j] = ismkit::CellOrigin::Diagonal;
            else if (coin(rng))
                cells[i * n + j] = ismkit::CellOrigin::Direct;
    return ismkit::ReachabilityMatrix(std::move(ids), std::move(cells));
}

// Digraph checks for the transitive reduction output.

inline Bool2d edges_of(const ismkit::Digraph& graph) {
    const std::size_t n = graph.node_ids.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index[graph.node_ids[i]] = i;
    Bool2d edges(n, std::vector<bool>(n, false));
    for (const auto& edge : graph.edges)
        edges[index.at(edge.from)][index.at(edge.to)] = true;
    return edges;
}

// Every closure cell must be witnessed by a path over the emitted edges,
// and vice versa.
inline bool digraph_closure_matches(const ismkit::Digraph& graph,
                                    const ismkit::ReachabilityMatrix& closed) {
    const std::size_t n = graph.node_ids.size();
    Bool2d edges = edges_of(graph);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (path_exists(edges, i, j) != closed.reaches(i, j))
                return false;
    return true;
}

// No emitted edge may be explained by a two-step path through the other
// emitted edges.
inline bool digraph_has_redundant_edge(const ismkit::Digraph& graph) {
    const std::size_t n = graph.node_ids.size();
    Bool2d edges = edges_of(graph);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!edges[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j && edges[i][k] && edges[k][j])
                    return true;
        }
    return false;
}

} // namespace oracle
