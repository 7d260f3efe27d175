#include "ismkit/survey.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ismkit/error.hpp"

namespace ismkit {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ','))
        cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        cells.push_back("");
    return cells;
}

} // namespace

SurveyData parse_survey_csv(const std::string& csv_text) {
    std::vector<std::string> lines;
    {
        std::string line;
        std::stringstream stream(csv_text);
        while (std::getline(stream, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            lines.push_back(line);
        }
        while (!lines.empty() && trim(lines.back()).empty())
            lines.pop_back();
    }
    if (lines.empty())
        throw ParseError("survey: empty document");

    std::vector<std::string> header = split_csv_line(lines[0]);
    static const std::vector<std::string> fixed = {"respondent_id", "item_id", "score"};
    if (header.size() < fixed.size() ||
        !std::equal(fixed.begin(), fixed.end(), header.begin()))
        throw ParseError("survey: header must start with respondent_id,item_id,score");

    SurveyData data;
    data.demographic_columns.assign(header.begin() + 3, header.end());
    {
        std::unordered_set<std::string> seen;
        for (const auto& column : data.demographic_columns) {
            if (column.empty())
                throw ParseError("survey: empty demographic column name in header");
            if (!seen.insert(column).second)
                throw ParseError("survey: duplicate column \"" + column + "\" in header");
        }
    }

    data.responses.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;  // 1-based, header is line 1
        if (trim(lines[i]).empty())
            continue;
        std::vector<std::string> cells = split_csv_line(lines[i]);
        if (cells.size() != header.size())
            throw ParseError("survey: line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(cells.size()));

        SurveyResponse response;
        response.respondent_id = cells[0];
        response.item_id = cells[1];
        if (response.respondent_id.empty())
            throw ParseError("survey: line " + std::to_string(line_no) + ": empty respondent_id");
        if (response.item_id.empty())
            throw ParseError("survey: line " + std::to_string(line_no) + ": empty item_id");

        const std::string& raw = cells[2];
        bool numeric = !raw.empty() &&
                       raw.find_first_not_of("0123456789") == std::string::npos &&
                       raw.size() <= 2;
        int score = numeric ? std::stoi(raw) : 0;
        if (!numeric || score < 1 || score > 5)
            throw ParseError("survey: line " + std::to_string(line_no) +
                             ": score must be an integer from 1 to 5, got \"" + raw + "\"");
        response.score = score;
        response.demographics.assign(cells.begin() + 3, cells.end());
        data.responses.push_back(std::move(response));
    }
    return data;
}

int display_percent(double pct) {
    return static_cast<int>(std::floor(pct + 0.5));
}

const FrequencyRow* FrequencyTable::find(const std::string& item_id) const {
    for (const auto& row : rows)
        if (row.item_id == item_id) return &row;
    return nullptr;
}

FrequencyTable aggregate_frequencies(const SurveyData& data,
                                     const std::vector<std::string>* expected_items) {
    if (data.responses.empty())
        throw ValidationError("survey: no responses to aggregate");

    struct Counts {
        std::size_t agree = 0, neutral = 0, disagree = 0;
    };
    std::map<std::string, Counts> by_item;
    std::vector<std::string> appearance;  // item order of first appearance
    std::set<std::pair<std::string, std::string>> seen;

    FrequencyTable table;
    for (const auto& response : data.responses) {
        if (!seen.insert({response.respondent_id, response.item_id}).second) {
            table.warnings.push_back("respondent " + response.respondent_id + ", item " +
                                     response.item_id + ": duplicate response ignored");
            continue;
        }
        auto [it, inserted] = by_item.try_emplace(response.item_id);
        if (inserted)
            appearance.push_back(response.item_id);
        if (response.score >= 4)
            ++it->second.agree;
        else if (response.score == 3)
            ++it->second.neutral;
        else
            ++it->second.disagree;
    }

    std::vector<std::string> order;
    if (expected_items) {
        std::unordered_set<std::string> expected(expected_items->begin(), expected_items->end());
        for (const auto& item : *expected_items) {
            if (by_item.count(item))
                order.push_back(item);
            else
                table.warnings.push_back("item " + item + ": expected but has no responses");
        }
        for (const auto& item : appearance) {
            if (!expected.count(item)) {
                table.warnings.push_back("item " + item + ": not in the expected item list");
                order.push_back(item);
            }
        }
    } else {
        order = appearance;
    }

    for (const auto& item : order) {
        const Counts& counts = by_item.at(item);
        FrequencyRow row;
        row.item_id = item;
        row.agree_count = counts.agree;
        row.neutral_count = counts.neutral;
        row.disagree_count = counts.disagree;
        row.n = counts.agree + counts.neutral + counts.disagree;
        row.agree_pct = 100.0 * static_cast<double>(row.agree_count) / static_cast<double>(row.n);
        row.neutral_pct =
            100.0 * static_cast<double>(row.neutral_count) / static_cast<double>(row.n);
        row.disagree_pct =
            100.0 * static_cast<double>(row.disagree_count) / static_cast<double>(row.n);
        row.agree_display = display_percent(row.agree_pct);
        row.neutral_display = display_percent(row.neutral_pct);
        row.disagree_display = display_percent(row.disagree_pct);
        table.rows.push_back(std::move(row));
    }
    return table;
}

double group_average_agree(const FrequencyTable& table, const std::vector<std::string>& item_ids) {
    if (item_ids.empty())
        throw ValidationError("survey: group average over an empty item list");
    double sum = 0.0;
    for (const auto& id : item_ids) {
        const FrequencyRow* row = table.find(id);
        if (!row)
            throw ValidationError("survey: item \"" + id + "\" has no frequency row");
        sum += row->agree_pct;
    }
    return sum / static_cast<double>(item_ids.size());
}

std::vector<BreakdownCategory> breakdown_by(const SurveyData& data, const std::string& column) {
    auto it = std::find(data.demographic_columns.begin(), data.demographic_columns.end(), column);
    if (it == data.demographic_columns.end()) {
        std::string available;
        for (const auto& name : data.demographic_columns)
            available += (available.empty() ? "" : ", ") + name;
        throw ValidationError("survey: no demographic column \"" + column + "\" (available: " +
                              (available.empty() ? "none" : available) + ")");
    }
    const std::size_t column_index =
        static_cast<std::size_t>(it - data.demographic_columns.begin());

    // One vote per respondent; the first row mentioning them decides.
    std::unordered_set<std::string> seen;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> appearance;
    for (const auto& response : data.responses) {
        if (!seen.insert(response.respondent_id).second)
            continue;
        const std::string& value = response.demographics[column_index];
        auto [entry, inserted] = counts.try_emplace(value, 0);
        if (inserted)
            appearance.push_back(value);
        ++entry->second;
    }

    const double total = static_cast<double>(seen.size());
    std::vector<BreakdownCategory> out;
    out.reserve(appearance.size());
    for (const auto& value : appearance) {
        BreakdownCategory category;
        category.value = value;
        category.count = counts.at(value);
        category.percent = 100.0 * static_cast<double>(category.count) / total;
        category.display = display_percent(category.percent);
        out.push_back(std::move(category));
    }
    return out;
}

} // namespace ismkit
