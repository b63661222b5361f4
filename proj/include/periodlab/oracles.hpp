#pragma once

// Brute-force oracles shared by the self-test, the unit tests and the
// acceptance runner. Everything here works with class functions on actual
// finite groups or with element-by-element evaluation, never with the
// symbolic node maps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "periodlab/localrules.hpp"
#include "periodlab/monomial.hpp"
#include "periodlab/weilmodel.hpp"

namespace periodlab::oracles {

inline std::vector<GroupPtr> model_groups() {
    return {build_semidirect(16, {2}, {-1}),       build_semidirect(8, {2}, {-1}),
            build_semidirect(8, {2}, {3}),         build_semidirect(8, {2}, {5}),
            build_semidirect(8, {2, 2}, {-1, 1}),  build_semidirect(8, {2, 2}, {-1, 5}),
            build_semidirect(8, {2, 2}, {3, 5}),   build_semidirect(16, {2, 2}, {-1, 7}),
            build_semidirect(12, {2, 2}, {-1, 5}), build_semidirect(12, {2, 2}, {5, 7}),
            build_semidirect(6, {4}, {-1}),        build_semidirect(8, {4}, {-1}),
            build_semidirect(8, {4, 2}, {3, -1}),  build_semidirect(24, {2, 2}, {-1, 1})};
}

inline ClassFunction zero(const GroupPtr& g) {
    return ClassFunction::from_elements(g, [&](int) { return Cyclo(g->conductor()); });
}

inline const WeilNode& node(const WeilModel& w, const std::string& n) {
    if (n == "F") return w.F;
    if (n == "E") return w.E;
    if (n == "L") return w.L;
    if (n == "Lp") return w.Lp;
    return w.M;
}

/// The class function of a formal summand: characters live on their node, Ind goes one step down.
inline ClassFunction summand_class_function(const WeilModel& w, const FormalSummand& s) {
    if (s.kind == FormalSummand::Kind::Character) return w.class_function(node(w, s.node), s.chi);
    if (s.node == "M") return induce_class_function(w.M_in_E, w.class_function(w.M, s.chi));
    const auto& n = node(w, s.node);
    return induce_class_function(n.sub, w.class_function(n, s.chi));
}

inline ClassFunction sum_of(const WeilModel& w, const GroupPtr& g, const std::vector<FormalSummand>& ss) {
    auto total = zero(g);
    for (const auto& s : ss) total = total + summand_class_function(w, s);
    return total;
}

inline ClassFunction induced_parameter(const WeilModel& w, const Character& mu) {
    return induce_class_function(w.M_in_E, w.class_function(w.M, mu));
}

/// Characters of F occurring in the twisted tensor lift of Ind mu.
inline std::vector<Character> brute_X(const WeilModel& w, const Character& mu) {
    const auto as = asai_class_function(w.E.sub, induced_parameter(w, mu));
    std::vector<Character> out;
    for (const auto& chi : enumerate_characters(w.diagram.F))
        if (inner_product(as, w.class_function(w.F, chi)) >= 1) out.push_back(chi);
    std::sort(out.begin(), out.end());
    return out;
}

/// Characters nu of W_E with Ind mu * nu = Ind mu that are trivial on the transfer image of W_F,
/// with the transfer evaluated element by element.
inline std::vector<Character> brute_Y(const WeilModel& w, const Character& mu) {
    const auto& G = *w.G;
    const auto ind = induced_parameter(w, mu);
    int s = 0;
    while (w.E.sub.contains(s)) ++s;
    std::vector<int> transfer_image;
    for (int g = 0; g < G.order(); ++g)
        transfer_image.push_back(w.E.sub.contains(g) ? G.mul(g, G.mul(G.mul(G.inv(s), g), s)) : G.mul(g, g));
    std::vector<Character> out;
    for (const auto& nu : enumerate_characters(w.diagram.E)) {
        const auto cf = w.class_function(w.E, nu);
        if (!(ind * cf == ind)) continue;
        const bool trivial = std::all_of(transfer_image.begin(), transfer_image.end(), [&](int v) {
            return cf(w.E.sub.from_parent[v]) == Cyclo::rational(G.conductor(), 1);
        });
        if (trivial) out.push_back(nu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains(const std::vector<Character>& v, const Character& c) {
    return std::find(v.begin(), v.end(), c) != v.end();
}

struct MonomialFixture {
    WeilModel model;
    Character mu;
    std::string group;
};

/// Every cuspidal mu on every Weil model of the fixture groups, in a fixed order.
inline void for_each_monomial(const std::function<bool(const MonomialFixture&)>& fn) {
    const auto groups = model_groups();
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (const auto& w : weil_models(groups[gi]))
            for (const auto& mu : enumerate_characters(w.diagram.M)) {
                if (act(mu, w.diagram.tau_M) == mu) continue;
                if (!fn({w, mu, "group " + std::to_string(gi)})) return;
            }
}

inline bool is_distinguished(const WeilModel& w, const Character& mu) {
    return contains(brute_X(w, mu), Character::trivial(w.diagram.F));
}

/// Source pattern of a distinguished datum: number of sources and how many are Galois over F.
inline std::pair<int, int> source_pattern(const RepDescriptor& r) {
    const auto src = quadratic_sources(r);
    int galois = 0;
    for (const auto& s : src) galois += s.galois.type != GaloisType::NonGalois;
    return {static_cast<int>(src.size()), galois};
}

/// First distinguished fixture with the given source pattern.
inline std::optional<MonomialFixture> find_fixture(int sources, int galois) {
    std::optional<MonomialFixture> found;
    for_each_monomial([&](const MonomialFixture& f) {
        if (!is_distinguished(f.model, f.mu)) return true;
        const auto r = RepDescriptor::from_monomial({f.model.diagram, f.mu, std::nullopt});
        if (source_pattern(r) != std::make_pair(sources, galois)) return true;
        found = f;
        return false;
    });
    return found;
}

// Quadratic forms

/// Reduced forms of discriminant D < 0 counted straight from the inequalities.
inline std::int64_t brute_reduced_count(std::int64_t D) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a * a <= -D; ++a)
        for (std::int64_t b = -a; b <= a; ++b)
            for (std::int64_t c = a; 4 * a * c - b * b <= -D; ++c) {
                if (b * b - 4 * a * c != D) continue;
                if ((b < 0) && (-b == a || a == c)) continue;
                ++count;
            }
    return count;
}

// Local places

struct ValueTable {
    std::vector<GroupElem> K_elems, k_images, sigma_images;
    std::vector<std::vector<Fraction>> values;  // per character, per element of K
    std::map<GroupElem, std::size_t> index;
};

inline ValueTable tabulate(const LocalPlaceModel& p, const std::vector<Character>& chars) {
    ValueTable t;
    t.K_elems = p.K.elements();
    for (std::size_t i = 0; i < t.K_elems.size(); ++i) t.index[t.K_elems[i]] = i;
    for (const auto& x : p.k.elements()) t.k_images.push_back(p.restrict(x));
    for (const auto& y : t.K_elems) t.sigma_images.push_back(p.sigma(y));
    for (const auto& c : chars) {
        std::vector<Fraction> v;
        for (const auto& y : t.K_elems) v.push_back(c(y));
        t.values.push_back(std::move(v));
    }
    return t;
}

inline Fraction diff(const Fraction& a, const Fraction& b) { return mod_one(a.num * b.den - b.num * a.den, a.den * b.den); }

/// Is Ps(chi_i, chi_j) distinguished, evaluating the ratio on every element.
inline bool brute_distinguished(const ValueTable& t, std::size_t i, std::size_t j) {
    auto ratio = [&](const GroupElem& y) {
        const auto n = t.index.at(y);
        return diff(t.values[i][n], t.values[j][n]);
    };
    const Fraction zero{0, 1};
    bool trivial_on_k = true;
    for (const auto& x : t.k_images)
        if (!(ratio(x) == zero)) {
            trivial_on_k = false;
            break;
        }
    if (trivial_on_k) return true;
    for (std::size_t n = 0; n < t.K_elems.size(); ++n)
        if (!(ratio(t.sigma_images[n]) == ratio(t.K_elems[n]))) return false;
    return true;
}

/// Characters nu of k^* with nu(Nm y) = chi(y) + chi(sigma y) for every y.
inline std::vector<Character> brute_equal_distinctions(const LocalPlaceModel& p, const Character& chi) {
    std::vector<Character> out;
    const auto elems = p.K.elements();
    for (const auto& nu : enumerate_characters(p.k)) {
        bool ok = true;
        for (const auto& y : elems) {
            const Fraction a = nu(p.norm(y));
            const Fraction b = chi(y), c = chi(p.sigma(y));
            if (!(diff(a, mod_one(b.num * c.den + c.num * b.den, b.den * c.den)) == Fraction{0, 1})) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(nu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace periodlab::oracles
