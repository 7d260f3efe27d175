#include "ismkit/audit.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "ismkit/error.hpp"

namespace ismkit {

using nlohmann::json;

namespace {

json parse_object(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(what + ": not valid JSON");
    if (!doc.is_object())
        throw ParseError(what + ": expected a JSON object");
    return doc;
}

std::vector<std::string> string_array(const json& value, const std::string& where) {
    if (!value.is_array())
        throw ParseError(where + " must be an array");
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        if (!entry.is_string())
            throw ParseError(where + " must contain strings");
        out.push_back(entry.get<std::string>());
    }
    return out;
}

std::vector<std::size_t> count_array(const json& value, const std::string& where,
                                     std::size_t expected_size) {
    if (!value.is_array())
        throw ParseError(where + " must be an array");
    if (value.size() != expected_size)
        throw ParseError(where + " must have " + std::to_string(expected_size) + " entries, got " +
                         std::to_string(value.size()));
    std::vector<std::size_t> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        if (!entry.is_number_unsigned())
            throw ParseError(where + " must contain non-negative integers");
        out.push_back(entry.get<std::size_t>());
    }
    return out;
}

} // namespace

ReferenceMatrix parse_reference_matrix(const std::string& json_text) {
    json doc = parse_object(json_text, "reference matrix");

    static const std::set<std::string> known = {
        "factor_ids",          "rows",
        "printed_driving_power",    "printed_driving_rank",
        "printed_dependence_power", "printed_dependence_rank",
    };
    for (const auto& [key, value] : doc.items())
        if (!known.count(key))
            throw ParseError("reference matrix: unknown field \"" + key + "\"");
    if (!doc.contains("factor_ids") || !doc.contains("rows"))
        throw ParseError("reference matrix: needs \"factor_ids\" and \"rows\"");

    std::vector<std::string> ids = string_array(doc.at("factor_ids"), "reference matrix: factor_ids");
    const std::size_t n = ids.size();

    const json& rows = doc.at("rows");
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("reference matrix: expected " + std::to_string(n) + " rows");

    std::vector<CellOrigin> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row = string_array(rows[i], "reference matrix: rows[" +
                                                    std::to_string(i) + "]");
        if (row.size() != n)
            throw ParseError("reference matrix: row " + ids[i] + " has " +
                             std::to_string(row.size()) + " cells, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            try {
                cells.push_back(cell_from_text(row[j], i == j));
            } catch (const ParseError& e) {
                throw ParseError("reference matrix: row " + ids[i] + ", column " + ids[j] + ": " +
                                 e.what());
            }
        }
    }

    ReferenceMatrix reference{ReachabilityMatrix(std::move(ids), std::move(cells)), std::nullopt};

    const bool any_printed = doc.contains("printed_driving_power") ||
                             doc.contains("printed_driving_rank") ||
                             doc.contains("printed_dependence_power") ||
                             doc.contains("printed_dependence_rank");
    if (any_printed) {
        for (const char* field : {"printed_driving_power", "printed_driving_rank",
                                  "printed_dependence_power", "printed_dependence_rank"})
            if (!doc.contains(field))
                throw ParseError(std::string("reference matrix: printed power fields must appear "
                                             "together; missing \"") + field + "\"");
        ReferenceMatrix::PrintedPowers printed;
        printed.driving = count_array(doc.at("printed_driving_power"),
                                      "reference matrix: printed_driving_power", n);
        printed.driving_rank = count_array(doc.at("printed_driving_rank"),
                                           "reference matrix: printed_driving_rank", n);
        printed.dependence = count_array(doc.at("printed_dependence_power"),
                                         "reference matrix: printed_dependence_power", n);
        printed.dependence_rank = count_array(doc.at("printed_dependence_rank"),
                                              "reference matrix: printed_dependence_rank", n);
        reference.printed = std::move(printed);
    }
    return reference;
}

bool MatrixDiff::clean() const {
    return cell_diffs.empty() && origin_diffs.empty() && power_diffs.empty() &&
           arithmetic_flags.empty() && rank_diffs.empty();
}

MatrixDiff compare_matrices(const ReachabilityMatrix& computed, const ReferenceMatrix& reference) {
    const ReachabilityMatrix& ref = reference.matrix;
    if (computed.size() != ref.size())
        throw ValidationError("matrix audit: computed matrix has " +
                              std::to_string(computed.size()) + " factors, reference has " +
                              std::to_string(ref.size()));
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (computed.factor_ids()[i] != ref.factor_ids()[i])
            throw ValidationError("matrix audit: factor order disagrees at position " +
                                  std::to_string(i) + " (computed \"" + computed.factor_ids()[i] +
                                  "\", reference \"" + ref.factor_ids()[i] + "\")");

    const std::size_t n = computed.size();
    const auto& ids = computed.factor_ids();
    MatrixDiff diff;
    diff.cells_compared = n * n;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::string c = cell_text(computed.origin(i, j));
            std::string r = cell_text(ref.origin(i, j));
            if (computed.reaches(i, j) != ref.reaches(i, j))
                diff.cell_diffs.push_back({ids[i], ids[j], c, r});
            else if (computed.reaches(i, j) && c != r)
                diff.origin_diffs.push_back({ids[i], ids[j], c, r});
        }
    }

    if (reference.printed) {
        diff.powers_present = true;
        const auto& printed = *reference.printed;

        auto compare_axis = [&](const std::string& axis, const std::vector<std::size_t>& computed_p,
                                const std::vector<std::size_t>& reference_recount,
                                const std::vector<std::size_t>& printed_p,
                                const std::vector<std::size_t>& printed_rank) {
            for (std::size_t i = 0; i < n; ++i)
                if (computed_p[i] != printed_p[i])
                    diff.power_diffs.push_back({axis, ids[i], computed_p[i], printed_p[i]});
            for (std::size_t i = 0; i < n; ++i)
                if (reference_recount[i] != printed_p[i])
                    diff.arithmetic_flags.push_back(
                        {axis, ids[i], printed_p[i], reference_recount[i]});
            std::vector<std::size_t> ranks = dense_ranks(printed_p);
            for (std::size_t i = 0; i < n; ++i)
                if (ranks[i] != printed_rank[i])
                    diff.rank_diffs.push_back({axis, ids[i], printed_rank[i], ranks[i]});
        };

        compare_axis("driving", driving_power(computed), driving_power(ref), printed.driving,
                     printed.driving_rank);
        compare_axis("dependence", dependence_power(computed), dependence_power(ref),
                     printed.dependence, printed.dependence_rank);
    }
    return diff;
}

LevelReference parse_level_reference(const std::string& json_text) {
    json doc = parse_object(json_text, "level reference");
    for (const auto& [key, value] : doc.items())
        if (key != "levels" && key != "level_names")
            throw ParseError("level reference: unknown field \"" + key + "\"");
    if (!doc.contains("levels"))
        throw ParseError("level reference: missing field \"levels\"");

    auto parse_level_key = [](const std::string& key) -> std::size_t {
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key == "0")
            throw ParseError("level reference: level keys must be positive integers, got \"" + key +
                             "\"");
        return static_cast<std::size_t>(std::stoul(key));
    };

    LevelReference reference;
    const json& levels = doc.at("levels");
    if (!levels.is_object())
        throw ParseError("level reference: \"levels\" must be an object");
    std::set<std::string> seen;
    for (const auto& [key, value] : levels.items()) {
        std::size_t level = parse_level_key(key);
        std::vector<std::string> members =
            string_array(value, "level reference: levels[\"" + key + "\"]");
        for (const auto& id : members)
            if (!seen.insert(id).second)
                throw ParseError("level reference: id \"" + id + "\" claimed for two levels");
        reference.levels[level] = std::move(members);
    }

    if (doc.contains("level_names")) {
        const json& names = doc.at("level_names");
        if (!names.is_object())
            throw ParseError("level reference: \"level_names\" must be an object");
        for (const auto& [key, value] : names.items()) {
            if (!value.is_string())
                throw ParseError("level reference: level names must be strings");
            reference.level_names[parse_level_key(key)] = value.get<std::string>();
        }
    }
    return reference;
}

LevelsDiff compare_levels(const LevelPartition& computed, const LevelReference& reference) {
    LevelsDiff diff;
    diff.computed_level_count = computed.level_count();

    for (const auto& [claimed_level, members] : reference.levels) {
        for (const auto& id : members) {
            auto computed_level = computed.level_of(id);
            if (!computed_level)
                throw ValidationError("level audit: reference id \"" + id +
                                      "\" is not in the computed partition");
            LevelDiffEntry entry;
            entry.id = id;
            entry.claimed_level = claimed_level;
            entry.computed_level = *computed_level;
            entry.match = entry.claimed_level == entry.computed_level;
            if (entry.match) ++diff.agreements;
            diff.entries.push_back(std::move(entry));
        }
    }

    auto top_claim = reference.levels.find(1);
    if (top_claim != reference.levels.end()) {
        diff.claimed_top = top_claim->second;
        std::set<std::string> claimed(diff.claimed_top.begin(), diff.claimed_top.end());
        const auto& actual_top = computed.level(1);
        std::set<std::string> actual(actual_top.begin(), actual_top.end());
        diff.top_matches = claimed == actual;
    } else {
        diff.top_matches = true;  // nothing claimed, nothing contradicted
    }
    return diff;
}

} // namespace ismkit
