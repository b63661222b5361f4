#include "periodlab/localrules.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace periodlab {

namespace {

struct CoordGroup {
    FinAbGroup group;
    std::vector<std::int64_t> orders;
    std::vector<GroupElem> gens;  // image of each coordinate generator
    std::map<GroupElem, std::vector<std::int64_t>> coords_of;
};

CoordGroup coord_group(const std::vector<std::int64_t>& orders) {
    IntMatrix rel;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<std::int64_t> row(orders.size(), 0);
        row[i] = orders[i];
        rel.push_back(row);
    }
    const auto pres = present(rel, orders.size());
    CoordGroup c{pres.group, orders, pres.generator_images, {}};
    std::vector<std::int64_t> x(orders.size(), 0);
    while (true) {
        GroupElem e = c.group.zero();
        for (std::size_t i = 0; i < x.size(); ++i) e = c.group.add(e, c.group.scale(c.gens[i], x[i]));
        c.coords_of.emplace(e, x);
        std::size_t i = 0;
        while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
        if (i == x.size()) break;
    }
    return c;
}

GroupElem elem_at(const CoordGroup& c, const std::vector<std::int64_t>& x) {
    if (x.size() != c.orders.size()) throw Error(ErrorCode::PlaceMismatch, "wrong number of coordinates");
    GroupElem e = c.group.zero();
    for (std::size_t i = 0; i < x.size(); ++i) e = c.group.add(e, c.group.scale(c.gens[i], x[i]));
    return e;
}

GroupHom coord_hom(const CoordGroup& from, const CoordGroup& to,
                   const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)>& f) {
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < from.group.rank(); ++j)
        images.push_back(elem_at(to, f(from.coords_of.at(from.group.generator(j)))));
    return GroupHom::from_images(from.group, to.group, images);
}

Character coord_character(const CoordGroup& c, const std::vector<Fraction>& values) {
    if (values.size() != c.orders.size()) throw Error(ErrorCode::PlaceMismatch, "wrong number of character values");
    for (std::size_t i = 0; i < values.size(); ++i)
        if ((values[i].num * c.orders[i]) % values[i].den != 0)
            throw Error(ErrorCode::PlaceMismatch, "character value " + values[i].str() + " is not killed by the coordinate order");
    std::vector<Fraction> comps;
    for (std::size_t j = 0; j < c.group.rank(); ++j) {
        const auto& x = c.coords_of.at(c.group.generator(j));
        std::int64_t den = 1;
        for (const auto& v : values) den = lcm64(den, v.den);
        std::int64_t num = 0;
        for (std::size_t i = 0; i < x.size(); ++i) num += x[i] * values[i].num * (den / values[i].den);
        comps.push_back(mod_one(num, den));
    }
    return Character::from_fractions(c.group, comps);
}

LocalPlaceModel assemble(PlaceKind kind, std::int64_t N, std::int64_t q, const std::vector<std::int64_t>& K_orders,
                         const std::vector<std::int64_t>& k_orders,
                         const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)>& res,
                         const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)>& nm,
                         const std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)>& sig,
                         const std::vector<Fraction>& omega) {
    const auto K = coord_group(K_orders);
    const auto k = coord_group(k_orders);
    LocalPlaceModel p;
    p.kind = kind;
    p.valuation_modulus = N;
    p.residue_size = q;
    p.K = K.group;
    p.k = k.group;
    p.K_orders = K_orders;
    p.k_orders = k_orders;
    p.restrict = coord_hom(k, K, res);
    p.norm = coord_hom(K, k, nm);
    p.sigma = coord_hom(K, K, sig);
    p.omega = coord_character(k, omega);
    return p;
}

}  // namespace

std::string_view to_string(PlaceKind k) { return k == PlaceKind::Inert ? "inert" : "split"; }

std::string_view to_string(LocalReason r) {
    switch (r) {
        case LocalReason::RatioTrivialOnK: return "ratio-trivial-on-k";
        case LocalReason::RatioSigmaInvariant: return "ratio-sigma-invariant";
        case LocalReason::SplitAutomatic: return "split-automatic";
        case LocalReason::None: return "none";
    }
    return "none";
}

GroupElem LocalPlaceModel::K_elem(const std::vector<std::int64_t>& coords) const { return elem_at(coord_group(K_orders), coords); }
GroupElem LocalPlaceModel::k_elem(const std::vector<std::int64_t>& coords) const { return elem_at(coord_group(k_orders), coords); }
Character LocalPlaceModel::K_character(const std::vector<Fraction>& values) const {
    return coord_character(coord_group(K_orders), values);
}
Character LocalPlaceModel::k_character(const std::vector<Fraction>& values) const {
    return coord_character(coord_group(k_orders), values);
}

std::vector<Fraction> LocalPlaceModel::K_values(const Character& chi) const {
    if (!(chi.group() == K)) throw Error(ErrorCode::PlaceMismatch, "character is not on this place's K model");
    const auto c = coord_group(K_orders);
    std::vector<Fraction> out;
    for (const auto& g : c.gens) out.push_back(chi(g));
    return out;
}

LocalPlaceModel inert_place(std::int64_t q, std::int64_t N) {
    if (q < 2) throw Error(ErrorCode::InvalidOrder, "residue field size must be at least 2");
    if (N < 2 || N % 2) throw Error(ErrorCode::InvalidOrder, "valuation modulus must be even");
    const std::int64_t uK = q * q - 1, uk = q - 1;
    using V = std::vector<std::int64_t>;
    return assemble(
        PlaceKind::Inert, N, q, {N, uK}, {N, uk}, [&](const V& x) { return V{x[0], (q + 1) * x[1]}; },
        [&](const V& x) { return V{2 * x[0], x[1]}; }, [&](const V& x) { return V{x[0], q * x[1]}; },
        {Fraction{1, 2}, Fraction{0, 1}});
}

LocalPlaceModel split_place(std::int64_t u, std::int64_t N) {
    if (u < 1 || N < 1) throw Error(ErrorCode::InvalidOrder, "orders must be positive");
    using V = std::vector<std::int64_t>;
    return assemble(
        PlaceKind::Split, N, 0, {N, u, N, u}, {N, u}, [](const V& x) { return V{x[0], x[1], x[0], x[1]}; },
        [](const V& x) { return V{x[0] + x[2], x[1] + x[3]}; }, [](const V& x) { return V{x[2], x[3], x[0], x[1]}; },
        {Fraction{0, 1}, Fraction{0, 1}});
}

bool place_is_consistent(const LocalPlaceModel& p) {
    const auto id = GroupHom::identity(p.K);
    return p.norm.compose(p.restrict) == GroupHom::scalar(p.k, 2) &&
           p.restrict.compose(p.norm) == id.plus(p.sigma) && p.sigma.compose(p.sigma) == id &&
           pullback_character(p.omega, p.norm).is_trivial() && p.omega.order() == (p.kind == PlaceKind::Inert ? 2 : 1);
}

std::vector<LocalPlaceModel> catalogue_places(std::int64_t max_order) {
    std::vector<LocalPlaceModel> out;
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11})
        for (std::int64_t N : {2, 4})
            if (N * (q * q - 1) <= max_order) out.push_back(inert_place(q, N));
    for (std::int64_t u = 1; u <= 8; ++u)
        for (std::int64_t N : {1, 2, 4})
            if (N * N * u * u <= max_order) out.push_back(split_place(u, N));
    return out;
}

LocalVerdict ps_sl2_distinguished(const Character& chi1, const Character& chi2, const LocalPlaceModel& p) {
    if (!(chi1.group() == p.K) || !(chi2.group() == p.K)) throw Error(ErrorCode::PlaceMismatch, "characters are not on this place");
    const Character ratio = chi1 / chi2;
    if (pullback_character(ratio, p.restrict).is_trivial()) return {true, LocalReason::RatioTrivialOnK};
    if (pullback_character(ratio, p.sigma) == ratio) return {true, LocalReason::RatioSigmaInvariant};
    return {false, LocalReason::None};
}

LocalVerdict archimedean_stub() { return {true, LocalReason::SplitAutomatic, true}; }

std::vector<Character> equal_character_distinctions(const Character& chi, const LocalPlaceModel& p) {
    if (p.kind != PlaceKind::Inert) throw Error(ErrorCode::PlaceMismatch, "needs an inert place");
    if (!(chi.group() == p.K)) throw Error(ErrorCode::PlaceMismatch, "character is not on this place");
    const Character r = pullback_character(chi, p.restrict);
    std::vector<Character> out{r, r * p.omega};
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t packet_size(const std::vector<Character>& x) {
    if (x.empty()) throw Error(ErrorCode::NotAGroup, "empty set of self-twists");
    auto has = [&](const Character& c) { return std::find(x.begin(), x.end(), c) != x.end(); };
    for (const auto& a : x) {
        if (!has(a.inverse())) throw Error(ErrorCode::NotAGroup, "self-twists not closed under inverses");
        for (const auto& b : x)
            if (!has(a * b)) throw Error(ErrorCode::NotAGroup, "self-twists not closed under products");
    }
    std::vector<Character> u = x;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    const auto n = static_cast<std::int64_t>(u.size());
    if (n != 1 && n != 2 && n != 4) throw Error(ErrorCode::InvalidOrder, "packet size " + std::to_string(n));
    return n;
}

OrbitCount orbit_count(std::int64_t order, bool monomial) {
    if (!monomial) {
        if (order != 1) throw Error(ErrorCode::InvalidOrder, "a non-monomial parameter has no nontrivial self-twists");
        return {1, "stable: every member of the packet is automorphic"};
    }
    if (order != 2 && order != 4) throw Error(ErrorCode::InvalidOrder, "self-twist group of order " + std::to_string(order));
    return {order, "exactly one orbit consists of automorphic representations"};
}

bool PrincipalSeries::operator==(const PrincipalSeries& o) const {
    return (a == o.a && b == o.b) || (a == o.b && b == o.a);
}

bool split_place_check(const PrincipalSeries& pi1, const PrincipalSeries& pi2, const Character& chi1,
                       const Character& chi2, const LocalPlaceModel& p) {
    if (p.kind != PlaceKind::Split) throw Error(ErrorCode::NotSplit, "needs a split place");
    for (const auto* c : {&pi1.a, &pi1.b, &pi2.a, &pi2.b, &chi1, &chi2})
        if (!(c->group() == p.k)) throw Error(ErrorCode::PlaceMismatch, "characters must live on the k model");
    return pi2 == pi1.dual().twist(chi1) && pi1 == pi2.dual().twist(chi2);
}

Json to_json(const LocalVerdict& v) {
    Json j{{"distinguished", v.distinguished}, {"reason", std::string(to_string(v.reason))}};
    if (v.assumed) j["assumed"] = true;
    return j;
}

LocalPlaceModel place_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const std::int64_t N = j.value("N", std::int64_t{4});
        if (kind == "inert") return inert_place(j.at("q").get<std::int64_t>(), N);
        if (kind == "split") return split_place(j.at("units").get<std::int64_t>(), N);
        throw Error(ErrorCode::ParseError, "place kind must be inert or split");
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad place description: ") + e.what());
    }
}

}  // namespace periodlab
