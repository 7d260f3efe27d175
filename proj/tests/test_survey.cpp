#include <random>

#include "doctest.h"

#include "ismkit/error.hpp"
#include "ismkit/factor.hpp"
#include "ismkit/survey.hpp"

#include "test_util.hpp"

using namespace ismkit;

TEST_CASE("fixture CSV parses with demographics") {
    SurveyData data = parse_survey_csv(testutil::fixture_file("survey_113.csv"));
    CHECK(data.demographic_columns == std::vector<std::string>{"gender"});
    CHECK(data.responses.size() == 113 * 43);
    CHECK(data.responses.front().respondent_id == "r001");
    CHECK(data.responses.front().demographics == std::vector<std::string>{"male"});
}

TEST_CASE("display rounding is half-up") {
    CHECK(display_percent(85.84) == 86);
    CHECK(display_percent(84.5) == 85);
    CHECK(display_percent(84.49) == 84);
    CHECK(display_percent(0.0) == 0);
    CHECK(display_percent(100.0) == 100);
    CHECK(display_percent(0.5) == 1);
}

TEST_CASE("113-respondent fixture reproduces the published agreement figures") {
    SurveyData data = parse_survey_csv(testutil::fixture_file("survey_113.csv"));
    FrequencyTable table = aggregate_frequencies(data);

    const FrequencyRow* p1 = table.find("P1");
    REQUIRE(p1 != nullptr);
    CHECK(p1->n == 113);
    CHECK(p1->agree_count == 97);
    CHECK(p1->agree_pct == doctest::Approx(85.8407079646).epsilon(1e-9));
    CHECK(p1->agree_display == 86);

    const FrequencyRow* p2 = table.find("P2");
    REQUIRE(p2 != nullptr);
    CHECK(p2->agree_count == 96);
    CHECK(p2->agree_display == 85);

    const FrequencyRow* p7 = table.find("P7");
    REQUIRE(p7 != nullptr);
    CHECK(p7->agree_count == 81);
    CHECK(p7->agree_display == 72);

    // Every row's exact percentages sum to 100.
    for (const auto& row : table.rows) {
        CHECK(row.n == 113);
        CHECK(row.agree_pct + row.neutral_pct + row.disagree_pct ==
              doctest::Approx(100.0).epsilon(1e-9));
        CHECK(row.agree_count + row.neutral_count + row.disagree_count == row.n);
    }
    CHECK(table.rows.size() == 43);
    CHECK(table.warnings.empty());
}

TEST_CASE("bucket boundaries: 4 and 5 agree, 3 neutral, 1 and 2 disagree") {
    SurveyData data = parse_survey_csv(
        "respondent_id,item_id,score\n"
        "r1,A,5\nr2,A,4\nr3,A,3\nr4,A,2\nr5,A,1\n");
    FrequencyTable table = aggregate_frequencies(data);
    const FrequencyRow* row = table.find("A");
    REQUIRE(row != nullptr);
    CHECK(row->agree_count == 2);
    CHECK(row->neutral_count == 1);
    CHECK(row->disagree_count == 2);
    CHECK(row->agree_pct == doctest::Approx(40.0));
    CHECK(row->neutral_pct == doctest::Approx(20.0));
}

TEST_CASE("duplicate responses keep the first answer and warn") {
    SurveyData data = parse_survey_csv(
        "respondent_id,item_id,score\n"
        "r1,A,5\nr1,A,1\nr2,A,4\n");
    FrequencyTable table = aggregate_frequencies(data);
    const FrequencyRow* row = table.find("A");
    REQUIRE(row != nullptr);
    CHECK(row->n == 2);
    CHECK(row->agree_count == 2);   // the later score 1 was ignored
    REQUIRE(table.warnings.size() == 1);
    CHECK(table.warnings[0] == "respondent r1, item A: duplicate response ignored");
}

TEST_CASE("expected item lists control order and produce coverage warnings") {
    SurveyData data = parse_survey_csv(
        "respondent_id,item_id,score\n"
        "r1,B,4\nr1,A,2\nr1,Z,3\n");
    std::vector<std::string> expected = {"A", "B", "C"};
    FrequencyTable table = aggregate_frequencies(data, &expected);

    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0].item_id == "A");
    CHECK(table.rows[1].item_id == "B");
    CHECK(table.rows[2].item_id == "Z");  // unexpected items go last

    REQUIRE(table.warnings.size() == 2);
    CHECK(table.warnings[0] == "item C: expected but has no responses");
    CHECK(table.warnings[1] == "item Z: not in the expected item list");
}

TEST_CASE("aggregation refuses empty input") {
    SurveyData empty;
    CHECK_THROWS_AS(aggregate_frequencies(empty), ValidationError);
}

TEST_CASE("group averages use unrounded percentages") {
    // Four respondents, every item at exactly 75% agreement, so the
    // group mean is exactly 75 with no rounding involved.
    SurveyData data = parse_survey_csv(testutil::fixture_file("survey_group75.csv"));
    FrequencyTable table = aggregate_frequencies(data);

    FactorCatalog catalog = parse_catalog(testutil::corpus_file("catalog.json"));
    std::vector<std::string> motivators;
    for (const auto& factor : catalog.of_kind(FactorKind::Motivator))
        motivators.push_back(factor.id);
    REQUIRE(motivators.size() == 14);

    CHECK(group_average_agree(table, motivators) == doctest::Approx(75.0).epsilon(1e-12));

    // Averaging exact values differs from averaging displays: two items
    // at 1/3 and 2/3 agreement average to exactly 50.
    SurveyData pair = parse_survey_csv(
        "respondent_id,item_id,score\n"
        "r1,X,5\nr2,X,1\nr3,X,1\n"
        "r1,Y,5\nr2,Y,5\nr3,Y,1\n");
    FrequencyTable pair_table = aggregate_frequencies(pair);
    CHECK(group_average_agree(pair_table, {"X", "Y"}) == doctest::Approx(50.0).epsilon(1e-9));
    // whereas the displayed percentages 33 and 67 would also give 50 but
    // 33.33 + 66.67 rounds item-wise; the exact path is the contract.

    CHECK_THROWS_AS(group_average_agree(table, {"NOPE"}), ValidationError);
    CHECK_THROWS_AS(group_average_agree(table, {}), ValidationError);
}

TEST_CASE("demographic breakdown counts each respondent once") {
    SurveyData data = parse_survey_csv(testutil::fixture_file("survey_113.csv"));
    auto categories = breakdown_by(data, "gender");
    REQUIRE(categories.size() == 2);
    CHECK(categories[0].value == "male");
    CHECK(categories[0].count == 78);
    CHECK(categories[0].display == 69);
    CHECK(categories[1].value == "female");
    CHECK(categories[1].count == 35);
    CHECK(categories[1].display == 31);
    CHECK(categories[0].percent + categories[1].percent == doctest::Approx(100.0));

    CHECK_THROWS_AS(breakdown_by(data, "age"), ValidationError);
}

TEST_CASE("breakdown uses the first row when a respondent's value flips") {
    SurveyData data = parse_survey_csv(
        "respondent_id,item_id,score,region\n"
        "r1,A,4,north\nr1,B,4,south\nr2,A,4,south\n");
    auto categories = breakdown_by(data, "region");
    REQUIRE(categories.size() == 2);
    CHECK(categories[0].value == "north");
    CHECK(categories[0].count == 1);
    CHECK(categories[1].value == "south");
    CHECK(categories[1].count == 1);
}

TEST_CASE("CSV errors name the offending line") {
    CHECK_THROWS_AS(parse_survey_csv(""), ParseError);
    CHECK_THROWS_AS(parse_survey_csv("id,item,value\n"), ParseError);

    try {
        parse_survey_csv("respondent_id,item_id,score\nr1,A,7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }

    try {
        parse_survey_csv("respondent_id,item_id,score\nr1,A,4\nr2,B\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_survey_csv("respondent_id,item_id,score\nr1,,4\n"), ParseError);
    CHECK_THROWS_AS(parse_survey_csv("respondent_id,item_id,score\nr1,A,4.5\n"), ParseError);
    CHECK_THROWS_AS(parse_survey_csv("respondent_id,item_id,score\nr1,A,-1\n"), ParseError);
    // Duplicate demographic column names collide.
    CHECK_THROWS_AS(parse_survey_csv("respondent_id,item_id,score,g,g\nr1,A,4,x,y\n"), ParseError);
}

TEST_CASE("percentage triples sum to 100 on random response sets") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> score_dist(1, 5);
    std::uniform_int_distribution<int> count_dist(1, 40);

    for (int round = 0; round < 200; ++round) {
        std::string csv = "respondent_id,item_id,score\n";
        int respondents = count_dist(rng);
        for (int r = 0; r < respondents; ++r)
            csv += "r" + std::to_string(r) + ",item," + std::to_string(score_dist(rng)) + "\n";
        FrequencyTable table = aggregate_frequencies(parse_survey_csv(csv));
        const FrequencyRow& row = table.rows.front();
        double sum = row.agree_pct + row.neutral_pct + row.disagree_pct;
        CHECK(sum > 99.9);
        CHECK(sum < 100.1);
    }
}
