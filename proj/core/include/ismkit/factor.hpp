#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ismkit {

enum class FactorKind { Motivator, Demotivator, Principle };

// "M" for motivators, "DM" for demotivators, "P" for principles.
std::string kind_prefix(FactorKind kind);
std::string kind_name(FactorKind kind);

struct Factor {
    std::string id;          // e.g. "P4", "M9", "DM12"
    std::string short_name;  // display label, e.g. "Bias"
    std::string description;
    FactorKind kind = FactorKind::Principle;

    bool operator==(const Factor&) const = default;
};

// An ordered collection of factors. Order is the order of the source
// document and is preserved everywhere downstream (matrix axes, reports).
class FactorCatalog {
public:
    FactorCatalog() = default;

    // Throws ValidationError on duplicate ids or if an id does not start
    // with the prefix for its kind.
    explicit FactorCatalog(std::string version, std::vector<Factor> factors);

    const std::string& version() const { return version_; }
    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }

    const Factor* find(const std::string& id) const;
    std::optional<std::size_t> index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }

    std::size_t count(FactorKind kind) const;
    std::vector<Factor> of_kind(FactorKind kind) const;

    bool operator==(const FactorCatalog&) const = default;

private:
    std::string version_;
    std::vector<Factor> factors_;
};

// JSON form:
//   {"version": "1.0", "factors": [{"id": ..., "short_name": ...,
//    "description": ..., "kind": "motivator"|"demotivator"|"principle"}, ...]}
// Unknown fields anywhere are rejected (ParseError), as are missing ones.
FactorCatalog parse_catalog(const std::string& json_text);
std::string serialize_catalog(const FactorCatalog& catalog);

enum class Polarity { Supports, Hinders };

struct MappingEdge {
    std::string source;  // motivator or demotivator id
    std::string target;  // principle id
    Polarity polarity = Polarity::Supports;

    bool operator==(const MappingEdge&) const = default;
};

// Cross-reference from motivators/demotivators onto the principles they
// touch. Kept dumb on purpose: consistency rules live in validate_mapping
// so a half-finished mapping can still be loaded and inspected.
struct TaxonomyMapping {
    std::vector<MappingEdge> edges;

    bool operator==(const TaxonomyMapping&) const = default;
};

// JSON form: {"edges": [{"source": ..., "target": ...,
//             "polarity": "supports"|"hinders"}, ...]} with strict fields.
TaxonomyMapping parse_mapping(const std::string& json_text);
std::string serialize_mapping(const TaxonomyMapping& mapping);

struct MappingIssue {
    std::size_t edge_index = 0;  // position in TaxonomyMapping::edges
    std::string source;
    std::string target;
    std::string problem;

    bool operator==(const MappingIssue&) const = default;
};

// Checks every edge against the catalog. Never throws; an empty result
// means the mapping is consistent. Rules:
//   - source and target ids must exist in the catalog
//   - source must be a motivator or demotivator, target a principle
//   - motivator edges must carry Supports, demotivator edges Hinders
//   - the same (source, target) pair may appear only once
std::vector<MappingIssue> validate_mapping(const TaxonomyMapping& mapping,
                                           const FactorCatalog& catalog);

} // namespace ismkit
