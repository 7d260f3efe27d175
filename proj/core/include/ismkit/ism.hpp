#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ismkit/reachability.hpp"
#include "ismkit/ssim.hpp"

namespace ismkit {

// Warshall closure over the boolean cells. Cells that become 1 only
// through the closure get the Transitive origin; existing origins are
// kept, so running it on an already closed matrix changes nothing.
ReachabilityMatrix transitive_closure(const ReachabilityMatrix& matrix);

// Row sums / column sums of the 1-cells (diagonal included).
std::vector<std::size_t> driving_power(const ReachabilityMatrix& matrix);
std::vector<std::size_t> dependence_power(const ReachabilityMatrix& matrix);

// Dense descending ranks: the highest power gets rank 1, ties share a
// rank, and the next distinct power gets the next integer.
std::vector<std::size_t> dense_ranks(const std::vector<std::size_t>& powers);

struct PowerProfile {
    std::vector<std::string> factor_ids;
    std::vector<std::size_t> driving;
    std::vector<std::size_t> dependence;
    std::vector<std::size_t> driving_rank;
    std::vector<std::size_t> dependence_rank;

    bool operator==(const PowerProfile&) const = default;
};

PowerProfile power_profile(const ReachabilityMatrix& closed);

// Levels are 1-based; level 1 is the top of the hierarchy (extracted
// first). Within a level, ids keep the matrix order.
class LevelPartition {
public:
    explicit LevelPartition(std::vector<std::vector<std::string>> levels);

    std::size_t level_count() const { return levels_.size(); }
    const std::vector<std::vector<std::string>>& levels() const { return levels_; }
    const std::vector<std::string>& level(std::size_t level_number) const;
    std::optional<std::size_t> level_of(const std::string& id) const;
    std::size_t factor_count() const;

    bool operator==(const LevelPartition&) const = default;

private:
    std::vector<std::vector<std::string>> levels_;
};

// Iterated extraction on a closed matrix: a factor belongs to the current
// level when its reachability set (within the remaining factors) equals
// the intersection of its reachability and antecedent sets. Throws
// ValidationError if an iteration extracts nothing, which only happens
// when the input is not actually a transitive closure.
LevelPartition partition_levels(const ReachabilityMatrix& closed);

// Reorders rows and columns so level 1 comes first, then level 2, and so
// on; within a level the original matrix order is kept. The partition
// must cover exactly the matrix's factors.
ReachabilityMatrix conical_matrix(const ReachabilityMatrix& closed,
                                  const LevelPartition& partition);

struct DigraphEdge {
    std::string from;
    std::string to;

    bool operator==(const DigraphEdge&) const = default;
};

struct Digraph {
    std::vector<std::string> node_ids;       // matrix order
    std::vector<std::size_t> node_levels;    // parallel to node_ids, 1-based
    std::vector<DigraphEdge> edges;          // row-major order, no self-loops

    bool operator==(const Digraph&) const = default;
};

// Starts from the direct (pre-closure) edges and drops, scanning cells in
// row-major order, every edge that is implied by a two-step path through
// the surviving edges. The closed matrix must be the closure of the
// initial one (checked cell-by-cell).
Digraph build_digraph(const ReachabilityMatrix& initial, const ReachabilityMatrix& closed,
                      const LevelPartition& partition);

struct IsmReport {
    ReachabilityMatrix initial;
    ReachabilityMatrix closed;
    PowerProfile powers;
    LevelPartition levels;
    ReachabilityMatrix conical;
    Digraph digraph;
};

// The whole pipeline in one call.
IsmReport run_ism(const SsimMatrix& ssim);

} // namespace ismkit
