#include "doctest.h"

#include "ismkit/error.hpp"
#include "ismkit/factor.hpp"

#include "test_util.hpp"

using namespace ismkit;

TEST_CASE("bundled catalog loads with the published counts") {
    FactorCatalog catalog = parse_catalog(testutil::corpus_file("catalog.json"));
    CHECK(catalog.size() == 43);
    CHECK(catalog.count(FactorKind::Motivator) == 14);
    CHECK(catalog.count(FactorKind::Demotivator) == 12);
    CHECK(catalog.count(FactorKind::Principle) == 17);
}

TEST_CASE("catalog lookup by id") {
    FactorCatalog catalog = parse_catalog(testutil::corpus_file("catalog.json"));

    const Factor* p1 = catalog.find("P1");
    REQUIRE(p1 != nullptr);
    CHECK(p1->short_name == "Bias");
    CHECK(p1->kind == FactorKind::Principle);

    const Factor* dm10 = catalog.find("DM10");
    REQUIRE(dm10 != nullptr);
    CHECK(dm10->short_name == "Misalignment Conflicts");
    CHECK(dm10->kind == FactorKind::Demotivator);

    CHECK(catalog.find("P99") == nullptr);
    CHECK(!catalog.index_of("P99").has_value());
    CHECK(catalog.index_of("P1").has_value());
}

TEST_CASE("empty catalog is valid with zero counts") {
    FactorCatalog catalog = parse_catalog(R"({"version": "1.0", "factors": []})");
    CHECK(catalog.size() == 0);
    CHECK(catalog.count(FactorKind::Motivator) == 0);
}

TEST_CASE("duplicate factor id is rejected") {
    const char* doc = R"({"factors": [
        {"id": "P1", "short_name": "a", "description": "", "kind": "principle"},
        {"id": "P1", "short_name": "b", "description": "", "kind": "principle"}]})";
    CHECK_THROWS_AS(parse_catalog(doc), ValidationError);
}

TEST_CASE("id prefix must match the kind") {
    const char* doc = R"({"factors": [
        {"id": "P3", "short_name": "x", "description": "", "kind": "motivator"}]})";
    CHECK_THROWS_AS(parse_catalog(doc), ValidationError);

    // "DM" ids must not pass as motivators even though they start with "M"
    // backwards; the prefix comparison is exact.
    const char* dm = R"({"factors": [
        {"id": "DM1", "short_name": "x", "description": "", "kind": "motivator"}]})";
    CHECK_THROWS_AS(parse_catalog(dm), ValidationError);
}

TEST_CASE("unknown and missing JSON fields are rejected") {
    CHECK_THROWS_AS(parse_catalog(R"({"factors": [], "extra": 1})"), ParseError);
    CHECK_THROWS_AS(parse_catalog(R"({"version": "1.0"})"), ParseError);
    CHECK_THROWS_AS(parse_catalog(R"({"factors": [
        {"id": "P1", "short_name": "a", "description": "", "kind": "principle", "color": "red"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_catalog(R"({"factors": [
        {"id": "P1", "short_name": "a", "kind": "principle"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_catalog("not json"), ParseError);
}

TEST_CASE("catalog survives a serialize/parse round trip") {
    FactorCatalog catalog = parse_catalog(testutil::corpus_file("catalog.json"));
    FactorCatalog again = parse_catalog(serialize_catalog(catalog));
    CHECK(again == catalog);
    // Serialization is stable byte for byte.
    CHECK(serialize_catalog(again) == serialize_catalog(catalog));
}

TEST_CASE("mapping validation") {
    FactorCatalog catalog = parse_catalog(testutil::corpus_file("catalog.json"));

    SUBCASE("legal edge gives an empty report") {
        TaxonomyMapping mapping{{{"M9", "P4", Polarity::Supports}}};
        CHECK(validate_mapping(mapping, catalog).empty());
    }

    SUBCASE("dangling ids are reported") {
        TaxonomyMapping mapping{{{"M99", "P4", Polarity::Supports}}};
        auto issues = validate_mapping(mapping, catalog);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].edge_index == 0);
        CHECK(issues[0].problem == "source id not in catalog");
    }

    SUBCASE("polarity must match the source kind") {
        TaxonomyMapping mapping{{{"M1", "P2", Polarity::Hinders},
                                  {"DM1", "P2", Polarity::Supports}}};
        auto issues = validate_mapping(mapping, catalog);
        REQUIRE(issues.size() == 2);
        CHECK(issues[0].problem == "motivator edges must have polarity \"supports\"");
        CHECK(issues[1].problem == "demotivator edges must have polarity \"hinders\"");
    }

    SUBCASE("principles cannot be sources, non-principles cannot be targets") {
        TaxonomyMapping mapping{{{"P1", "M1", Polarity::Supports}}};
        auto issues = validate_mapping(mapping, catalog);
        // source is a principle, target is not a principle
        CHECK(issues.size() == 2);
    }

    SUBCASE("duplicate edges are reported") {
        TaxonomyMapping mapping{{{"M1", "P2", Polarity::Supports},
                                  {"M1", "P2", Polarity::Supports}}};
        auto issues = validate_mapping(mapping, catalog);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0].problem == "duplicate edge");
        CHECK(issues[0].edge_index == 1);
    }
}

TEST_CASE("mapping parse round trip and strictness") {
    const char* doc = R"({"edges": [
        {"source": "M9", "target": "P4", "polarity": "supports"},
        {"source": "DM6", "target": "P14", "polarity": "hinders"}]})";
    TaxonomyMapping mapping = parse_mapping(doc);
    REQUIRE(mapping.edges.size() == 2);
    CHECK(mapping.edges[0] == MappingEdge{"M9", "P4", Polarity::Supports});
    CHECK(parse_mapping(serialize_mapping(mapping)) == mapping);

    CHECK_THROWS_AS(parse_mapping(R"({"edges": [], "notes": ""})"), ParseError);
    CHECK_THROWS_AS(parse_mapping(R"({"edges": [{"source": "M1", "target": "P1"}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_mapping(R"({"edges": [{"source": "M1", "target": "P1", "polarity": "maybe"}]})"),
        ParseError);
}
