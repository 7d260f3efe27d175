#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ismkit/ism.hpp"
#include "ismkit/reachability.hpp"

namespace ismkit {

// A transcription of a published reachability matrix, optionally with the
// power and rank columns as they were printed (which may contain the
// source's own arithmetic slips; that is exactly what the audit flags).
struct ReferenceMatrix {
    struct PrintedPowers {
        std::vector<std::size_t> driving;
        std::vector<std::size_t> driving_rank;
        std::vector<std::size_t> dependence;
        std::vector<std::size_t> dependence_rank;

        bool operator==(const PrintedPowers&) const = default;
    };

    ReachabilityMatrix matrix;
    std::optional<PrintedPowers> printed;
};

// JSON form:
//   {"factor_ids": [...], "rows": [["1","0","1*",...], ...],
//    "printed_driving_power": [...], "printed_driving_rank": [...],
//    "printed_dependence_power": [...], "printed_dependence_rank": [...]}
// The four printed_* arrays are optional but must appear together.
ReferenceMatrix parse_reference_matrix(const std::string& json_text);

struct CellDiff {
    std::string row;
    std::string col;
    std::string computed;   // "0", "1" or "1*"
    std::string reference;

    bool operator==(const CellDiff&) const = default;
};

struct PowerDiff {
    std::string axis;  // "driving" or "dependence"
    std::string id;
    std::size_t computed = 0;
    std::size_t printed = 0;

    bool operator==(const PowerDiff&) const = default;
};

// The printed power disagrees with a recount of the reference's own row
// or column: an internal arithmetic slip in the source table.
struct ArithmeticFlag {
    std::string axis;
    std::string id;
    std::size_t printed = 0;
    std::size_t recounted = 0;

    bool operator==(const ArithmeticFlag&) const = default;
};

struct RankDiff {
    std::string axis;
    std::string id;
    std::size_t printed_rank = 0;
    std::size_t recomputed_rank = 0;  // dense rank over the printed powers

    bool operator==(const RankDiff&) const = default;
};

struct MatrixDiff {
    std::size_t cells_compared = 0;
    std::vector<CellDiff> cell_diffs;    // 0 on one side, 1 on the other
    std::vector<CellDiff> origin_diffs;  // both 1, but "1" vs "1*"
    bool powers_present = false;
    std::vector<PowerDiff> power_diffs;
    std::vector<ArithmeticFlag> arithmetic_flags;
    std::vector<RankDiff> rank_diffs;

    bool clean() const;
};

// Cell-by-cell comparison in row-major order. Both matrices must agree on
// factor ids and order (ValidationError otherwise). Power sections are
// filled only when the reference carries printed powers.
MatrixDiff compare_matrices(const ReachabilityMatrix& computed, const ReferenceMatrix& reference);

// Published level claims; only the levels the source spells out.
struct LevelReference {
    std::map<std::size_t, std::vector<std::string>> levels;
    std::map<std::size_t, std::string> level_names;
};

// JSON form: {"levels": {"1": ["P11", ...], ...},
//             "level_names": {"1": "...", ...}} with level_names optional.
LevelReference parse_level_reference(const std::string& json_text);

struct LevelDiffEntry {
    std::string id;
    std::size_t claimed_level = 0;
    std::size_t computed_level = 0;
    bool match = false;

    bool operator==(const LevelDiffEntry&) const = default;
};

struct LevelsDiff {
    std::size_t computed_level_count = 0;
    std::vector<LevelDiffEntry> entries;  // by claimed level, then claim order
    std::size_t agreements = 0;
    // Does the reference's level 1 coincide with the computed top level?
    std::vector<std::string> claimed_top;
    bool top_matches = false;

    bool clean() const { return agreements == entries.size() && top_matches; }
};

// Every claimed id must exist in the computed partition.
LevelsDiff compare_levels(const LevelPartition& computed, const LevelReference& reference);

} // namespace ismkit
