#include <algorithm>

#include "doctest.h"

#include "ismkit/audit.hpp"
#include "ismkit/error.hpp"
#include "ismkit/ism.hpp"
#include "ismkit/ssim.hpp"

#include "test_util.hpp"

using namespace ismkit;

namespace {

ReachabilityMatrix corpus_closed() {
    return transitive_closure(to_initial_reachability(parse_ssim(testutil::corpus_file("ssim.csv"))));
}

ReferenceMatrix corpus_reference() {
    return parse_reference_matrix(testutil::corpus_file("reachability.reference.json"));
}

} // namespace

TEST_CASE("reference matrix parses with printed power columns") {
    ReferenceMatrix reference = corpus_reference();
    CHECK(reference.matrix.size() == 17);
    REQUIRE(reference.printed.has_value());
    CHECK(reference.printed->driving.size() == 17);
    CHECK(reference.printed->driving[0] == 6);
    CHECK(reference.printed->dependence[0] == 9);

    // Recounting the transcribed P1 row reproduces the printed total.
    CHECK(driving_power(reference.matrix)[0] == 6);
    // The printed P4 total does not survive a recount of its own row.
    CHECK(driving_power(reference.matrix)[3] == 10);
    CHECK(reference.printed->driving[3] == 9);
}

TEST_CASE("reference matrix parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_reference_matrix("not json"), ParseError);
    CHECK_THROWS_AS(parse_reference_matrix(R"({"rows": []})"), ParseError);
    CHECK_THROWS_AS(parse_reference_matrix(R"({"factor_ids": ["A"], "rows": [["1"]], "note": 1})"),
                    ParseError);
    // Wrong row length.
    CHECK_THROWS_AS(parse_reference_matrix(R"({"factor_ids": ["A", "B"],
        "rows": [["1"], ["0", "1"]]})"),
                    ParseError);
    // Diagonal must be 1.
    CHECK_THROWS_AS(parse_reference_matrix(R"({"factor_ids": ["A"], "rows": [["0"]]})"),
                    ParseError);
    // Illegal cell text.
    CHECK_THROWS_AS(parse_reference_matrix(R"({"factor_ids": ["A", "B"],
        "rows": [["1", "2"], ["0", "1"]]})"),
                    ParseError);
    // Printed columns must arrive as a complete set.
    CHECK_THROWS_AS(parse_reference_matrix(R"({"factor_ids": ["A"], "rows": [["1"]],
        "printed_driving_power": [1]})"),
                    ParseError);
}

TEST_CASE("corpus audit against the transcribed table") {
    MatrixDiff diff = compare_matrices(corpus_closed(), corpus_reference());

    CHECK(diff.cells_compared == 289);
    CHECK(!diff.clean());
    CHECK(diff.cell_diffs.size() == 131);
    CHECK(diff.origin_diffs.size() == 11);
    CHECK(diff.powers_present);
    CHECK(diff.power_diffs.size() == 34);
    CHECK(diff.arithmetic_flags.size() == 14);
    CHECK(diff.rank_diffs.size() == 30);

    // The transcribed table disagrees with its own conversion rules at
    // (P2,P13): the X judgment puts a direct 1 there, the table prints 0.
    CHECK(std::find(diff.cell_diffs.begin(), diff.cell_diffs.end(),
                    CellDiff{"P2", "P13", "1", "0"}) != diff.cell_diffs.end());
    // (P5,P4) is the reverse case: printed 1*, not derivable.
    CHECK(std::find(diff.cell_diffs.begin(), diff.cell_diffs.end(),
                    CellDiff{"P5", "P4", "0", "1*"}) != diff.cell_diffs.end());
    // Same value, different origin marking.
    CHECK(std::find(diff.origin_diffs.begin(), diff.origin_diffs.end(),
                    CellDiff{"P3", "P11", "1*", "1"}) != diff.origin_diffs.end());
    // (P4,P14) agrees on "1*", so it must not show up anywhere.
    auto mentions_p4_p14 = [](const CellDiff& d) { return d.row == "P4" && d.col == "P14"; };
    CHECK(std::none_of(diff.cell_diffs.begin(), diff.cell_diffs.end(), mentions_p4_p14));
    CHECK(std::none_of(diff.origin_diffs.begin(), diff.origin_diffs.end(), mentions_p4_p14));
}

TEST_CASE("corpus audit flags every internal arithmetic slip of the table") {
    MatrixDiff diff = compare_matrices(corpus_closed(), corpus_reference());

    const std::vector<ArithmeticFlag> expected = {
        {"driving", "P4", 9, 10},  {"driving", "P5", 8, 9},     {"driving", "P7", 2, 5},
        {"driving", "P9", 6, 7},   {"driving", "P14", 4, 5},    {"driving", "P15", 5, 6},
        {"driving", "P17", 5, 6},  {"dependence", "P2", 4, 5},  {"dependence", "P4", 5, 6},
        {"dependence", "P6", 9, 10}, {"dependence", "P8", 6, 9}, {"dependence", "P9", 8, 9},
        {"dependence", "P14", 5, 6}, {"dependence", "P15", 2, 3},
    };
    CHECK(diff.arithmetic_flags == expected);
}

TEST_CASE("corpus audit reports the inconsistent printed ranks") {
    MatrixDiff diff = compare_matrices(corpus_closed(), corpus_reference());

    // P1 and P9 share printed power 6 but were printed with ranks 4 and
    // 5; a dense ranking of the printed powers puts both at 3.
    CHECK(std::find(diff.rank_diffs.begin(), diff.rank_diffs.end(),
                    RankDiff{"driving", "P1", 4, 3}) != diff.rank_diffs.end());
    CHECK(std::find(diff.rank_diffs.begin(), diff.rank_diffs.end(),
                    RankDiff{"driving", "P9", 5, 3}) != diff.rank_diffs.end());
}

TEST_CASE("audit of a matrix against itself is clean") {
    ReachabilityMatrix closed = corpus_closed();

    ReferenceMatrix self{closed, ReferenceMatrix::PrintedPowers{}};
    self.printed->driving = driving_power(closed);
    self.printed->driving_rank = dense_ranks(self.printed->driving);
    self.printed->dependence = dependence_power(closed);
    self.printed->dependence_rank = dense_ranks(self.printed->dependence);

    MatrixDiff diff = compare_matrices(closed, self);
    CHECK(diff.clean());
    CHECK(diff.cell_diffs.empty());
    CHECK(diff.powers_present);
    CHECK(diff.power_diffs.empty());
    CHECK(diff.arithmetic_flags.empty());
    CHECK(diff.rank_diffs.empty());
}

TEST_CASE("audit without printed powers compares cells only") {
    ReachabilityMatrix closed = corpus_closed();
    ReferenceMatrix cells_only{closed, std::nullopt};
    MatrixDiff diff = compare_matrices(closed, cells_only);
    CHECK(!diff.powers_present);
    CHECK(diff.power_diffs.empty());
    CHECK(diff.arithmetic_flags.empty());
    CHECK(diff.rank_diffs.empty());
    CHECK(diff.clean());
}

TEST_CASE("audit rejects mismatched dimensions or factor order") {
    ReachabilityMatrix closed = corpus_closed();
    ReferenceMatrix small{ReachabilityMatrix::identity({"P1", "P2"}), std::nullopt};
    CHECK_THROWS_AS(compare_matrices(closed, small), ValidationError);

    std::vector<std::string> swapped = closed.factor_ids();
    std::swap(swapped[0], swapped[1]);
    ReferenceMatrix reordered{ReachabilityMatrix::identity(swapped), std::nullopt};
    CHECK_THROWS_AS(compare_matrices(ReachabilityMatrix::identity(closed.factor_ids()), reordered),
                    ValidationError);
}

TEST_CASE("level reference parses names and claims") {
    LevelReference reference = parse_level_reference(testutil::corpus_file("levels.reference.json"));
    CHECK(reference.levels.size() == 3);
    CHECK(reference.levels.at(1) == std::vector<std::string>{"P11", "P13"});
    CHECK(reference.levels.at(3) == std::vector<std::string>{"P5", "P6", "P9"});
    CHECK(reference.level_names.size() == 5);
    CHECK(reference.level_names.at(1) == "Foundations of Ethical Research");

    CHECK_THROWS_AS(parse_level_reference(R"({"levels": {"0": []}})"), ParseError);
    CHECK_THROWS_AS(parse_level_reference(R"({"levels": {"1": ["A"], "2": ["A"]}})"), ParseError);
    CHECK_THROWS_AS(parse_level_reference(R"({"notes": []})"), ParseError);
}

TEST_CASE("level audit against the published narrative") {
    ReachabilityMatrix closed = corpus_closed();
    LevelPartition partition = partition_levels(closed);
    LevelReference reference = parse_level_reference(testutil::corpus_file("levels.reference.json"));

    LevelsDiff diff = compare_levels(partition, reference);
    CHECK(diff.computed_level_count == 4);
    REQUIRE(diff.entries.size() == 11);

    // The claimed top pair lands at computed level 3 (they do still sit
    // at the same level as each other, just not the top).
    CHECK(diff.entries[0] == LevelDiffEntry{"P11", 1, 3, false});
    CHECK(diff.entries[1] == LevelDiffEntry{"P13", 1, 3, false});

    // Agreements: P14 at level 2 plus the whole claimed level 3.
    CHECK(diff.agreements == 4);
    CHECK(std::find(diff.entries.begin(), diff.entries.end(),
                    LevelDiffEntry{"P14", 2, 2, true}) != diff.entries.end());
    CHECK(std::find(diff.entries.begin(), diff.entries.end(),
                    LevelDiffEntry{"P5", 3, 3, true}) != diff.entries.end());

    CHECK(diff.claimed_top == std::vector<std::string>{"P11", "P13"});
    CHECK(!diff.top_matches);
    CHECK(!diff.clean());
}

TEST_CASE("level audit validates claim ids") {
    LevelPartition partition({{"A"}, {"B"}});
    LevelReference reference;
    reference.levels[1] = {"C"};
    CHECK_THROWS_AS(compare_levels(partition, reference), ValidationError);
}

TEST_CASE("level audit with no level-1 claim does not contradict the top") {
    LevelPartition partition({{"A"}, {"B"}});
    LevelReference reference;
    reference.levels[2] = {"B"};
    LevelsDiff diff = compare_levels(partition, reference);
    CHECK(diff.top_matches);
    CHECK(diff.agreements == 1);
    CHECK(diff.clean());
}
