#include "ismkit/micmac.hpp"

#include <set>

#include "json.hpp"

#include "ismkit/error.hpp"

namespace ismkit {

using nlohmann::json;

std::string quadrant_name(Quadrant q) {
    switch (q) {
    case Quadrant::Autonomous: return "autonomous";
    case Quadrant::Dependent: return "dependent";
    case Quadrant::Linkage: return "linkage";
    case Quadrant::Independent: return "independent";
    }
    return "?";
}

MicmacThresholds auto_thresholds(std::size_t factor_count) {
    double half = static_cast<double>(factor_count) / 2.0;
    return MicmacThresholds{half, half};
}

std::vector<std::string> MicmacClassification::in_quadrant(Quadrant q) const {
    std::vector<std::string> ids;
    for (const auto& p : points)
        if (p.quadrant == q) ids.push_back(p.id);
    return ids;
}

MicmacClassification classify_micmac(const PowerProfile& powers,
                                     const MicmacThresholds& thresholds) {
    if (!(thresholds.driving > 0.0) || !(thresholds.dependence > 0.0))
        throw ValidationError("micmac: cutoffs must be positive");

    MicmacClassification result;
    result.thresholds = thresholds;
    result.points.reserve(powers.factor_ids.size());
    for (std::size_t i = 0; i < powers.factor_ids.size(); ++i) {
        MicmacPoint p;
        p.id = powers.factor_ids[i];
        p.driving = powers.driving[i];
        p.dependence = powers.dependence[i];
        bool strong_driving = static_cast<double>(p.driving) > thresholds.driving;
        bool strong_dependence = static_cast<double>(p.dependence) > thresholds.dependence;
        if (strong_driving && strong_dependence)
            p.quadrant = Quadrant::Linkage;
        else if (strong_driving)
            p.quadrant = Quadrant::Independent;
        else if (strong_dependence)
            p.quadrant = Quadrant::Dependent;
        else
            p.quadrant = Quadrant::Autonomous;
        result.points.push_back(std::move(p));
    }
    return result;
}

QuadrantChart chart_data(const MicmacClassification& classification) {
    QuadrantChart chart;
    chart.thresholds = classification.thresholds;
    chart.axis_max = classification.points.size();
    chart.points = classification.points;
    return chart;
}

ClusterReference parse_cluster_reference(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError("cluster reference: not valid JSON");
    if (!doc.is_object())
        throw ParseError("cluster reference: expected a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "clusters")
            throw ParseError("cluster reference: unknown field \"" + key + "\"");
    if (!doc.contains("clusters"))
        throw ParseError("cluster reference: missing field \"clusters\"");

    const json& clusters = doc.at("clusters");
    if (!clusters.is_object())
        throw ParseError("cluster reference: \"clusters\" must be an object");

    static const std::map<std::string, Quadrant> names = {
        {"autonomous", Quadrant::Autonomous},
        {"dependent", Quadrant::Dependent},
        {"linkage", Quadrant::Linkage},
        {"independent", Quadrant::Independent},
    };
    for (const auto& [key, value] : clusters.items())
        if (!names.count(key))
            throw ParseError("cluster reference: unknown cluster \"" + key + "\"");

    ClusterReference reference;
    for (const auto& [name, quadrant] : names) {
        if (!clusters.contains(name))
            throw ParseError("cluster reference: missing cluster \"" + name + "\"");
        const json& list = clusters.at(name);
        if (!list.is_array())
            throw ParseError("cluster reference: cluster \"" + name + "\" must be an array");
        for (const auto& entry : list) {
            if (!entry.is_string())
                throw ParseError("cluster reference: ids must be strings");
            std::string id = entry.get<std::string>();
            if (!reference.assignment.emplace(id, quadrant).second)
                throw ParseError("cluster reference: id \"" + id + "\" listed twice");
        }
    }
    return reference;
}

ClusterDiff compare_clusters(const MicmacClassification& computed,
                             const ClusterReference& reference) {
    std::set<std::string> computed_ids;
    for (const auto& p : computed.points)
        computed_ids.insert(p.id);
    for (const auto& [id, quadrant] : reference.assignment)
        if (!computed_ids.count(id))
            throw ValidationError("cluster audit: reference id \"" + id +
                                  "\" is not in the classification");
    for (const auto& id : computed_ids)
        if (!reference.assignment.count(id))
            throw ValidationError("cluster audit: factor \"" + id +
                                  "\" is missing from the reference");

    ClusterDiff diff;
    diff.entries.reserve(computed.points.size());
    for (const auto& p : computed.points) {
        ClusterDiffEntry entry;
        entry.id = p.id;
        entry.computed = p.quadrant;
        entry.reference = reference.assignment.at(p.id);
        entry.match = entry.computed == entry.reference;
        if (entry.match) ++diff.agreements;
        diff.entries.push_back(std::move(entry));
    }
    return diff;
}

} // namespace ismkit
