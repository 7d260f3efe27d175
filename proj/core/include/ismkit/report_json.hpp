#pragma once

#include <map>
#include <string>
#include <vector>

#include "ismkit/audit.hpp"
#include "ismkit/ism.hpp"
#include "ismkit/micmac.hpp"
#include "ismkit/survey.hpp"

namespace ismkit {

// All serializers emit two-space-indented JSON with keys in sorted order
// and a trailing newline, so identical inputs give byte-identical files.

// Five sections: matrix (cells with 0/1/"1*" origins, plus the conical
// permutation), powers, ranks, levels, edges.
std::string ism_report_json(const IsmReport& report);

std::string matrix_diff_json(const MatrixDiff& diff);
std::string cluster_diff_json(const ClusterDiff& diff);
std::string levels_diff_json(const LevelsDiff& diff);

std::string micmac_json(const MicmacClassification& classification, const QuadrantChart& chart);

struct SurveyGroupResult {
    std::vector<std::string> item_ids;
    double average_agree_pct = 0.0;
    int display = 0;
};

std::string survey_json(const FrequencyTable& table,
                        const std::map<std::string, SurveyGroupResult>& groups,
                        const std::map<std::string, std::vector<BreakdownCategory>>& breakdowns);

} // namespace ismkit
