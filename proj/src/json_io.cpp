#include "gq/json_io.hpp"

namespace gq {

Json structure_to_json(const IncidenceStructure& s) {
    Json j;
    j["name"] = s.name();
    j["points"] = s.point_count();
    j["lines"] = s.lines();
    return j;
}

IncidenceStructure structure_from_json(const Json& j) {
    try {
        return IncidenceStructure(j.at("points").get<std::size_t>(),
                                  j.at("lines").get<std::vector<std::vector<Point>>>(), j.value("name", ""));
    } catch (const Json::exception& e) {
        throw Error("FormatError", std::string("incidence structure JSON: ") + e.what());
    }
}

std::string dump_structure(const IncidenceStructure& s) { return structure_to_json(s).dump() + "\n"; }

IncidenceStructure parse_structure(const std::string& text) {
    try {
        return structure_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw Error("FormatError", e.what());
    }
}

Json permutation_to_json(const Permutation& p) { return p.image_vector(); }

Permutation permutation_from_json(const Json& j) {
    try {
        return Permutation::from_images(j.get<std::vector<Point>>());
    } catch (const Json::exception& e) {
        throw Error("FormatError", std::string("permutation JSON: ") + e.what());
    }
}

Json group_to_json(const PermGroup& g) {
    Json j;
    j["domain"] = g.degree();
    j["generators"] = Json::array();
    for (const auto& gen : g.generators()) j["generators"].push_back(permutation_to_json(gen));
    return j;
}

PermGroup group_from_json(const Json& j) {
    try {
        const auto n = j.at("domain").get<std::size_t>();
        std::vector<Permutation> gens;
        for (const auto& g : j.at("generators")) {
            gens.push_back(permutation_from_json(g));
            if (gens.back().degree() != n) throw Error("FormatError", "generator length differs from domain");
        }
        return PermGroup(n, std::move(gens));
    } catch (const Json::exception& e) {
        throw Error("FormatError", std::string("group JSON: ") + e.what());
    }
}

} // namespace gq
