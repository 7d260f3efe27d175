#include "ismkit/factor.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "ismkit/error.hpp"

namespace ismkit {

using nlohmann::json;

std::string kind_prefix(FactorKind kind) {
    switch (kind) {
    case FactorKind::Motivator: return "M";
    case FactorKind::Demotivator: return "DM";
    case FactorKind::Principle: return "P";
    }
    return "?";
}

std::string kind_name(FactorKind kind) {
    switch (kind) {
    case FactorKind::Motivator: return "motivator";
    case FactorKind::Demotivator: return "demotivator";
    case FactorKind::Principle: return "principle";
    }
    return "?";
}

namespace {

// Ids follow the pattern <prefix><number>. The prefix is every character
// up to the first digit, which must match the factor's kind exactly
// ("M" and "DM" would otherwise be ambiguous at the first character).
std::string id_prefix(const std::string& id) {
    auto digit = std::find_if(id.begin(), id.end(),
                              [](unsigned char c) { return std::isdigit(c) != 0; });
    return std::string(id.begin(), digit);
}

void require_fields(const json& obj, const std::string& where,
                    const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
    if (!obj.is_object())
        throw ParseError(where + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (!required.count(key) && !optional.count(key))
            throw ParseError(where + ": unknown field \"" + key + "\"");
    }
    for (const auto& key : required) {
        if (!obj.contains(key))
            throw ParseError(where + ": missing field \"" + key + "\"");
    }
}

std::string string_field(const json& obj, const std::string& where, const std::string& key) {
    const auto& value = obj.at(key);
    if (!value.is_string())
        throw ParseError(where + ": field \"" + key + "\" must be a string");
    return value.get<std::string>();
}

FactorKind parse_kind(const std::string& text, const std::string& where) {
    if (text == "motivator") return FactorKind::Motivator;
    if (text == "demotivator") return FactorKind::Demotivator;
    if (text == "principle") return FactorKind::Principle;
    throw ParseError(where + ": kind must be \"motivator\", \"demotivator\" or \"principle\", got \"" +
                     text + "\"");
}

Polarity parse_polarity(const std::string& text, const std::string& where) {
    if (text == "supports") return Polarity::Supports;
    if (text == "hinders") return Polarity::Hinders;
    throw ParseError(where + ": polarity must be \"supports\" or \"hinders\", got \"" + text + "\"");
}

json parse_json_text(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError(what + ": not valid JSON");
    return doc;
}

} // namespace

FactorCatalog::FactorCatalog(std::string version, std::vector<Factor> factors)
    : version_(std::move(version)), factors_(std::move(factors)) {
    std::unordered_set<std::string> seen;
    for (const auto& f : factors_) {
        if (f.id.empty())
            throw ValidationError("catalog: factor with empty id");
        if (!seen.insert(f.id).second)
            throw ValidationError("catalog: duplicate factor id \"" + f.id + "\"");
        if (id_prefix(f.id) != kind_prefix(f.kind))
            throw ValidationError("catalog: id \"" + f.id + "\" does not match the \"" +
                                  kind_prefix(f.kind) + "\" prefix for kind " + kind_name(f.kind));
    }
}

const Factor* FactorCatalog::find(const std::string& id) const {
    for (const auto& f : factors_)
        if (f.id == id) return &f;
    return nullptr;
}

std::optional<std::size_t> FactorCatalog::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].id == id) return i;
    return std::nullopt;
}

std::size_t FactorCatalog::count(FactorKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        factors_.begin(), factors_.end(),
        [kind](const Factor& f) { return f.kind == kind; }));
}

std::vector<Factor> FactorCatalog::of_kind(FactorKind kind) const {
    std::vector<Factor> out;
    for (const auto& f : factors_)
        if (f.kind == kind) out.push_back(f);
    return out;
}

FactorCatalog parse_catalog(const std::string& json_text) {
    json doc = parse_json_text(json_text, "catalog");
    require_fields(doc, "catalog", {"factors"}, {"version"});
    std::string version;
    if (doc.contains("version"))
        version = string_field(doc, "catalog", "version");

    const auto& list = doc.at("factors");
    if (!list.is_array())
        throw ParseError("catalog: \"factors\" must be an array");

    std::vector<Factor> factors;
    factors.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string where = "catalog: factors[" + std::to_string(i) + "]";
        const json& entry = list[i];
        require_fields(entry, where, {"id", "short_name", "description", "kind"});
        Factor f;
        f.id = string_field(entry, where, "id");
        f.short_name = string_field(entry, where, "short_name");
        f.description = string_field(entry, where, "description");
        f.kind = parse_kind(string_field(entry, where, "kind"), where);
        factors.push_back(std::move(f));
    }
    return FactorCatalog(std::move(version), std::move(factors));
}

std::string serialize_catalog(const FactorCatalog& catalog) {
    json list = json::array();
    for (const auto& f : catalog.factors()) {
        list.push_back({{"id", f.id},
                        {"short_name", f.short_name},
                        {"description", f.description},
                        {"kind", kind_name(f.kind)}});
    }
    json doc = {{"version", catalog.version()}, {"factors", std::move(list)}};
    return doc.dump(2) + "\n";
}

TaxonomyMapping parse_mapping(const std::string& json_text) {
    json doc = parse_json_text(json_text, "mapping");
    require_fields(doc, "mapping", {"edges"});
    const auto& list = doc.at("edges");
    if (!list.is_array())
        throw ParseError("mapping: \"edges\" must be an array");

    TaxonomyMapping mapping;
    mapping.edges.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string where = "mapping: edges[" + std::to_string(i) + "]";
        const json& entry = list[i];
        require_fields(entry, where, {"source", "target", "polarity"});
        MappingEdge edge;
        edge.source = string_field(entry, where, "source");
        edge.target = string_field(entry, where, "target");
        edge.polarity = parse_polarity(string_field(entry, where, "polarity"), where);
        mapping.edges.push_back(std::move(edge));
    }
    return mapping;
}

std::string serialize_mapping(const TaxonomyMapping& mapping) {
    json list = json::array();
    for (const auto& e : mapping.edges) {
        list.push_back({{"source", e.source},
                        {"target", e.target},
                        {"polarity", e.polarity == Polarity::Supports ? "supports" : "hinders"}});
    }
    json doc = {{"edges", std::move(list)}};
    return doc.dump(2) + "\n";
}

std::vector<MappingIssue> validate_mapping(const TaxonomyMapping& mapping,
                                           const FactorCatalog& catalog) {
    std::vector<MappingIssue> issues;
    std::set<std::pair<std::string, std::string>> seen;

    for (std::size_t i = 0; i < mapping.edges.size(); ++i) {
        const MappingEdge& edge = mapping.edges[i];
        auto report = [&](std::string problem) {
            issues.push_back({i, edge.source, edge.target, std::move(problem)});
        };

        const Factor* source = catalog.find(edge.source);
        const Factor* target = catalog.find(edge.target);
        if (!source)
            report("source id not in catalog");
        if (!target)
            report("target id not in catalog");

        if (source && source->kind == FactorKind::Principle)
            report("source must be a motivator or demotivator, \"" + edge.source +
                   "\" is a principle");
        if (target && target->kind != FactorKind::Principle)
            report("target must be a principle, \"" + edge.target + "\" is a " +
                   kind_name(target->kind));

        if (source && source->kind == FactorKind::Motivator && edge.polarity != Polarity::Supports)
            report("motivator edges must have polarity \"supports\"");
        if (source && source->kind == FactorKind::Demotivator && edge.polarity != Polarity::Hinders)
            report("demotivator edges must have polarity \"hinders\"");

        if (!seen.insert({edge.source, edge.target}).second)
            report("duplicate edge");
    }
    return issues;
}

} // namespace ismkit
