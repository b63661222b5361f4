#include "periodlab/abgroup_json.hpp"

namespace periodlab {

namespace {

template <typename T>
T get_or_throw(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

Json to_json(const FinAbGroup& g) { return Json{{"invariants", g.invariants()}}; }

Json to_json(const GroupElem& x) { return Json{{"coords", x.coords}}; }

Json to_json(const GroupHom& f) {
    return Json{{"matrix", f.matrix()}, {"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}};
}

Json to_json(const Character& chi) {
    Json comps = Json::array();
    for (const auto& c : chi.components()) comps.push_back(c.str());
    return Json{{"components", comps}};
}

FinAbGroup group_from_json(const Json& j) {
    return FinAbGroup(get_or_throw<std::vector<std::int64_t>>(j, "invariants"));
}

GroupElem elem_from_json(const Json& j, const FinAbGroup& parent) {
    auto coords = get_or_throw<std::vector<std::int64_t>>(j, "coords");
    GroupElem x{coords};
    if (!parent.contains(x)) throw Error(ErrorCode::ParseError, "element coordinates out of range");
    return x;
}

GroupHom hom_from_json(const Json& j) {
    auto domain = group_from_json(get_or_throw<Json>(j, "domain"));
    auto codomain = group_from_json(get_or_throw<Json>(j, "codomain"));
    auto matrix = get_or_throw<IntMatrix>(j, "matrix");
    // An empty matrix stands for a map into the trivial group.
    if (matrix.empty() && codomain.rank() == 0) return GroupHom::zero(domain, codomain);
    return GroupHom(domain, codomain, matrix);
}

Character character_from_json(const Json& j, const FinAbGroup& group) {
    std::vector<Fraction> comps;
    for (const auto& s : get_or_throw<std::vector<std::string>>(j, "components")) comps.push_back(Fraction::parse(s));
    return Character::from_fractions(group, comps);
}

}  // namespace periodlab
