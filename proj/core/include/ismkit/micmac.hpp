#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ismkit/ism.hpp"

namespace ismkit {

enum class Quadrant { Autonomous, Dependent, Linkage, Independent };

// "autonomous", "dependent", "linkage", "independent".
std::string quadrant_name(Quadrant q);

// A power counts as strong only when it is strictly greater than the
// cutoff, so factors sitting exactly on a cutoff fall to the weak side.
struct MicmacThresholds {
    double driving = 0.0;
    double dependence = 0.0;
};

// Default cutoffs: half the factor count on both axes.
MicmacThresholds auto_thresholds(std::size_t factor_count);

struct MicmacPoint {
    std::string id;
    std::size_t driving = 0;
    std::size_t dependence = 0;
    Quadrant quadrant = Quadrant::Autonomous;

    bool operator==(const MicmacPoint&) const = default;
};

struct MicmacClassification {
    MicmacThresholds thresholds;
    std::vector<MicmacPoint> points;  // matrix order

    std::vector<std::string> in_quadrant(Quadrant q) const;
};

// Strong driving + weak dependence -> Independent; weak + strong ->
// Dependent; both strong -> Linkage; both weak -> Autonomous.
// Thresholds must be positive (ValidationError otherwise).
MicmacClassification classify_micmac(const PowerProfile& powers,
                                     const MicmacThresholds& thresholds);

// Everything the scatter chart needs: both axes run 0..axis_max where
// axis_max is the factor count (the largest possible power).
struct QuadrantChart {
    MicmacThresholds thresholds;
    std::size_t axis_max = 0;
    std::vector<MicmacPoint> points;
};

QuadrantChart chart_data(const MicmacClassification& classification);

// Published cluster membership to audit against, keyed by factor id.
struct ClusterReference {
    std::map<std::string, Quadrant> assignment;
};

// JSON form: {"clusters": {"autonomous": [...], "dependent": [...],
//             "linkage": [...], "independent": [...]}}, strict fields,
// every id at most once across the four lists.
ClusterReference parse_cluster_reference(const std::string& json_text);

struct ClusterDiffEntry {
    std::string id;
    Quadrant computed = Quadrant::Autonomous;
    Quadrant reference = Quadrant::Autonomous;
    bool match = false;

    bool operator==(const ClusterDiffEntry&) const = default;
};

struct ClusterDiff {
    std::vector<ClusterDiffEntry> entries;  // computed point order
    std::size_t agreements = 0;

    bool clean() const { return agreements == entries.size(); }
};

// Throws ValidationError when the reference covers a different id set
// than the classification.
ClusterDiff compare_clusters(const MicmacClassification& computed,
                             const ClusterReference& reference);

} // namespace ismkit
