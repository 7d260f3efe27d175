#include "ismkit/report_json.hpp"

#include "json.hpp"

namespace ismkit {

using nlohmann::json;

namespace {

json matrix_rows(const ReachabilityMatrix& matrix) {
    json rows = json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < matrix.size(); ++j)
            row.push_back(cell_text(matrix.origin(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json levels_object(const LevelPartition& partition) {
    json levels = json::object();
    for (std::size_t level = 1; level <= partition.level_count(); ++level)
        levels[std::to_string(level)] = partition.level(level);
    return levels;
}

std::string dump(const json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace

std::string ism_report_json(const IsmReport& report) {
    json doc;
    doc["matrix"] = {
        {"factor_ids", report.closed.factor_ids()},
        {"rows", matrix_rows(report.closed)},
        {"conical_order", report.conical.factor_ids()},
        {"conical_rows", matrix_rows(report.conical)},
    };
    doc["powers"] = {
        {"driving", report.powers.driving},
        {"dependence", report.powers.dependence},
    };
    doc["ranks"] = {
        {"driving", report.powers.driving_rank},
        {"dependence", report.powers.dependence_rank},
    };
    doc["levels"] = levels_object(report.levels);
    json edges = json::array();
    for (const auto& edge : report.digraph.edges)
        edges.push_back({{"from", edge.from}, {"to", edge.to}});
    doc["edges"] = std::move(edges);
    return dump(doc);
}

std::string matrix_diff_json(const MatrixDiff& diff) {
    auto cell_list = [](const std::vector<CellDiff>& diffs) {
        json list = json::array();
        for (const auto& d : diffs)
            list.push_back({{"row", d.row},
                            {"col", d.col},
                            {"computed", d.computed},
                            {"reference", d.reference}});
        return list;
    };

    json doc;
    doc["cells_compared"] = diff.cells_compared;
    doc["cell_diffs"] = cell_list(diff.cell_diffs);
    doc["origin_diffs"] = cell_list(diff.origin_diffs);

    if (diff.powers_present) {
        json power_diffs = json::array();
        for (const auto& d : diff.power_diffs)
            power_diffs.push_back(
                {{"axis", d.axis}, {"id", d.id}, {"computed", d.computed}, {"printed", d.printed}});
        json flags = json::array();
        for (const auto& f : diff.arithmetic_flags)
            flags.push_back({{"axis", f.axis},
                             {"id", f.id},
                             {"printed", f.printed},
                             {"recounted", f.recounted}});
        json rank_diffs = json::array();
        for (const auto& d : diff.rank_diffs)
            rank_diffs.push_back({{"axis", d.axis},
                                  {"id", d.id},
                                  {"printed_rank", d.printed_rank},
                                  {"recomputed_rank", d.recomputed_rank}});
        doc["powers"] = {{"power_diffs", std::move(power_diffs)},
                         {"arithmetic_flags", std::move(flags)},
                         {"rank_diffs", std::move(rank_diffs)}};
    } else {
        doc["powers"] = nullptr;
    }

    doc["summary"] = {
        {"cell_diffs", diff.cell_diffs.size()},
        {"origin_diffs", diff.origin_diffs.size()},
        {"power_diffs", diff.power_diffs.size()},
        {"arithmetic_flags", diff.arithmetic_flags.size()},
        {"rank_diffs", diff.rank_diffs.size()},
        {"clean", diff.clean()},
    };
    return dump(doc);
}

std::string cluster_diff_json(const ClusterDiff& diff) {
    json entries = json::array();
    for (const auto& entry : diff.entries)
        entries.push_back({{"id", entry.id},
                           {"computed", quadrant_name(entry.computed)},
                           {"reference", quadrant_name(entry.reference)},
                           {"match", entry.match}});
    json doc = {
        {"entries", std::move(entries)},
        {"agreements", diff.agreements},
        {"total", diff.entries.size()},
        {"clean", diff.clean()},
    };
    return dump(doc);
}

std::string levels_diff_json(const LevelsDiff& diff) {
    json entries = json::array();
    for (const auto& entry : diff.entries)
        entries.push_back({{"id", entry.id},
                           {"claimed_level", entry.claimed_level},
                           {"computed_level", entry.computed_level},
                           {"match", entry.match}});
    json doc = {
        {"computed_level_count", diff.computed_level_count},
        {"entries", std::move(entries)},
        {"agreements", diff.agreements},
        {"top_claim", {{"claimed", diff.claimed_top}, {"matches", diff.top_matches}}},
        {"clean", diff.clean()},
    };
    return dump(doc);
}

std::string micmac_json(const MicmacClassification& classification, const QuadrantChart& chart) {
    json points = json::array();
    for (const auto& p : classification.points)
        points.push_back({{"id", p.id},
                          {"driving", p.driving},
                          {"dependence", p.dependence},
                          {"quadrant", quadrant_name(p.quadrant)}});
    json clusters = json::object();
    for (Quadrant q : {Quadrant::Autonomous, Quadrant::Dependent, Quadrant::Linkage,
                       Quadrant::Independent})
        clusters[quadrant_name(q)] = classification.in_quadrant(q);
    json doc = {
        {"cutoffs",
         {{"driving", classification.thresholds.driving},
          {"dependence", classification.thresholds.dependence},
          // Points sitting exactly on a cutoff land on the weak side.
          {"boundary_rule", "strictly greater than the cutoff counts as strong"}}},
        {"chart", {{"axis_max", chart.axis_max}}},
        {"points", std::move(points)},
        {"clusters", std::move(clusters)},
    };
    return dump(doc);
}

std::string survey_json(const FrequencyTable& table,
                        const std::map<std::string, SurveyGroupResult>& groups,
                        const std::map<std::string, std::vector<BreakdownCategory>>& breakdowns) {
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"item_id", row.item_id},
                        {"n", row.n},
                        {"agree_count", row.agree_count},
                        {"neutral_count", row.neutral_count},
                        {"disagree_count", row.disagree_count},
                        {"agree_pct", row.agree_pct},
                        {"neutral_pct", row.neutral_pct},
                        {"disagree_pct", row.disagree_pct},
                        {"agree_display", row.agree_display},
                        {"neutral_display", row.neutral_display},
                        {"disagree_display", row.disagree_display}});

    json group_obj = json::object();
    for (const auto& [name, group] : groups)
        group_obj[name] = {{"items", group.item_ids},
                           {"average_agree_pct", group.average_agree_pct},
                           {"display", group.display}};

    json breakdown_obj = json::object();
    for (const auto& [column, categories] : breakdowns) {
        json list = json::array();
        for (const auto& category : categories)
            list.push_back({{"value", category.value},
                            {"count", category.count},
                            {"percent", category.percent},
                            {"display", category.display}});
        breakdown_obj[column] = std::move(list);
    }

    json doc = {
        {"table", std::move(rows)},
        {"groups", std::move(group_obj)},
        {"breakdowns", std::move(breakdown_obj)},
        {"warnings", table.warnings},
    };
    return dump(doc);
}

} // namespace ismkit
