#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ismkit {

// One Likert answer (1..5) from one respondent about one survey item.
// demographics holds the extra CSV columns, in header order.
struct SurveyResponse {
    std::string respondent_id;
    std::string item_id;
    int score = 0;
    std::vector<std::string> demographics;

    bool operator==(const SurveyResponse&) const = default;
};

struct SurveyData {
    std::vector<std::string> demographic_columns;
    std::vector<SurveyResponse> responses;

    bool operator==(const SurveyData&) const = default;
};

// Header must start with respondent_id,item_id,score; any further columns
// are demographics. Scores outside 1..5 or rows with the wrong number of
// fields raise ParseError naming the offending line.
SurveyData parse_survey_csv(const std::string& csv_text);

// 4 and 5 count as agreement, 3 as neutral, 1 and 2 as disagreement.
struct FrequencyRow {
    std::string item_id;
    std::size_t n = 0;
    std::size_t agree_count = 0;
    std::size_t neutral_count = 0;
    std::size_t disagree_count = 0;
    double agree_pct = 0.0;     // exact, 100 * count / n
    double neutral_pct = 0.0;
    double disagree_pct = 0.0;
    int agree_display = 0;      // display_percent of the exact value
    int neutral_display = 0;
    int disagree_display = 0;

    bool operator==(const FrequencyRow&) const = default;
};

// Half-up integer rounding used for every percentage shown to a reader.
// The exact doubles stay available for downstream arithmetic.
int display_percent(double pct);

struct FrequencyTable {
    std::vector<FrequencyRow> rows;
    std::vector<std::string> warnings;

    const FrequencyRow* find(const std::string& item_id) const;
};

// Counts each (respondent, item) pair once; repeats keep the first answer
// and add a warning. With expected_items given, rows come out in that
// order, items with no responses are warned about, and unexpected items
// are appended (also with a warning). Throws ValidationError on empty
// input.
FrequencyTable aggregate_frequencies(const SurveyData& data,
                                     const std::vector<std::string>* expected_items = nullptr);

// Unweighted mean of the exact agreement percentages of the given items.
// Every id must have a row in the table.
double group_average_agree(const FrequencyTable& table, const std::vector<std::string>& item_ids);

struct BreakdownCategory {
    std::string value;
    std::size_t count = 0;
    double percent = 0.0;
    int display = 0;

    bool operator==(const BreakdownCategory&) const = default;
};

// Respondent counts per value of one demographic column. Each respondent
// is counted once (first occurrence wins when rows disagree). Categories
// come out in order of first appearance.
std::vector<BreakdownCategory> breakdown_by(const SurveyData& data, const std::string& column);

} // namespace ismkit
