#include "periodlab/monomial.hpp"

#include <algorithm>
#include <set>

namespace periodlab {

namespace {

Character nontrivial_annihilator(const GroupHom& nm, const char* what) {
    const auto ann = annihilator_of_image(nm);
    if (ann.size() != 2) throw Error(ErrorCode::PreconditionFailed, std::string("norm image of ") + what + " does not have index 2");
    return ann[0].is_trivial() ? ann[1] : ann[0];
}

void sort_unique(std::vector<Character>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Ind from the quadratic node to its base: either two base characters or one induced symbol
void split_or_induce(const GroupHom& nm, const Character& lambda, const std::string& base, const std::string& node,
                     std::vector<FormalSummand>& out) {
    const auto sols = all_pullback_solutions(nm, lambda);
    if (sols.size() == 2) {
        for (const auto& k : sols) out.push_back({FormalSummand::Kind::Character, base, k});
        return;
    }
    if (!sols.empty()) throw Error(ErrorCode::PreconditionFailed, "norm image of " + node + " does not have index 2");
    out.push_back({FormalSummand::Kind::Induced, node, lambda});
}

GroupHom one_plus(const GroupHom& g) { return GroupHom::identity(g.domain()).plus(g); }

}  // namespace

void MonomialDatum::validate() const {
    if (!(mu.group() == diagram.M)) throw Error(ErrorCode::GroupMismatch, "mu must live on the M node");
    if (act(mu, diagram.tau_M) == mu) throw Error(ErrorCode::ReducibleParameter, "mu = mu^tau, the induced parameter is reducible");
    if (eta && !(eta->group() == diagram.L)) throw Error(ErrorCode::GroupMismatch, "eta must live on the L node");
}

MonomialDatum datum_from_eta(const FieldDiagram& d, const Character& eta) {
    if (!(eta.group() == d.L)) throw Error(ErrorCode::GroupMismatch, "eta must live on the L node");
    MonomialDatum m{d, pullback_character(eta, d.nm_ML), eta};
    m.validate();
    return m;
}

RepDescriptor RepDescriptor::from_monomial(MonomialDatum m) {
    m.validate();
    RepDescriptor r;
    r.diagram = m.diagram;
    r.monomial = std::move(m);
    r.tag = "monomial";
    return r;
}

RepDescriptor RepDescriptor::non_monomial(FieldDiagram d, std::string tag, std::optional<bool> distinguished) {
    RepDescriptor r;
    r.diagram = std::move(d);
    r.tag = std::move(tag);
    r.known_distinguished = distinguished;
    return r;
}

std::vector<Character> self_twists(const RepDescriptor& r) {
    const auto& d = r.diagram;
    if (!r.is_monomial()) return {Character::trivial(d.E)};
    const auto& m = *r.monomial;
    m.validate();
    std::vector<Character> out{Character::trivial(d.E), d.omega_ME};
    const Character lambda = act(m.mu, d.tau_M) / m.mu;
    if (lambda.order() == 2) {
        const auto extra = all_pullback_solutions(d.nm_ME, lambda);
        if (extra.empty())
            throw Error(ErrorCode::ModelTooSmall, "mu^tau/mu has order 2 but is not a norm from the E node");
        out.insert(out.end(), extra.begin(), extra.end());
    }
    sort_unique(out);
    for (const auto& a : out)
        for (const auto& b : out)
            if (!std::binary_search(out.begin(), out.end(), a * b))
                throw Error(ErrorCode::PreconditionFailed, "self-twists are not closed under products");
    if (out.size() != 2 && out.size() != 4)
        throw Error(ErrorCode::InvalidOrder, "self-twist group of order " + std::to_string(out.size()));
    return out;
}

std::vector<QuadraticSource> quadratic_sources(const RepDescriptor& r) {
    std::vector<QuadraticSource> out;
    for (const auto& w : self_twists(r))
        if (!w.is_trivial()) out.push_back({w, classify_quadratic_extension(w, r.diagram)});
    return out;
}

std::ostream& operator<<(std::ostream& os, const FormalSummand& s) {
    if (s.kind == FormalSummand::Kind::Induced) return os << "Ind_" << s.node << "(" << s.chi << ")";
    return os << s.node << ":" << s.chi;
}

int AsaiDecomposition::dimension() const {
    int n = 0;
    for (const auto& s : summands) n += s.dimension();
    return n;
}

AsaiDecomposition asai_of_monomial(const MonomialDatum& m) {
    m.validate();
    const auto& d = m.diagram;
    AsaiDecomposition out;
    split_or_induce(d.nm_LF, pullback_character(m.mu, d.up_LM), "F", "L", out.summands);
    split_or_induce(d.nm_LpF, pullback_character(m.mu, d.up_LpM), "F", "Lp", out.summands);
    for (const auto& s : out.summands)
        if (s.kind == FormalSummand::Kind::Character && s.chi.is_trivial()) out.contains_trivial = true;
    return out;
}

AsaiDecomposition asai_decompose(const RepDescriptor& r) {
    if (!r.is_monomial() || !r.monomial->eta) throw Error(ErrorCode::MissingOrigin, "descriptor has no F-level origin");
    const auto& m = *r.monomial;
    const auto& d = m.diagram;
    const Character& eta = *m.eta;
    m.validate();
    if (!(pullback_character(eta, d.nm_ML) == m.mu))
        throw Error(ErrorCode::MissingOrigin, "mu is not the restriction of eta");
    if (!pullback_character(eta, d.up_FL).is_trivial())
        throw Error(ErrorCode::PreconditionFailed, "eta is not trivial on the image of F");
    AsaiDecomposition out;
    out.summands.push_back({FormalSummand::Kind::Induced, "L", eta.pow(2)});
    out.summands.push_back({FormalSummand::Kind::Character, "F", Character::trivial(d.F)});
    out.summands.push_back({FormalSummand::Kind::Character, "F", d.omega_EF * omega_LF(d)});
    out.contains_trivial = true;
    return out;
}

std::vector<FormalSummand> tensor_monomial(const FieldDiagram& d, const Character& mu1, const Character& mu2) {
    if (!(mu1.group() == d.M) || !(mu2.group() == d.M)) throw Error(ErrorCode::GroupMismatch, "characters must live on the M node");
    std::vector<FormalSummand> out;
    split_or_induce(d.nm_ME, mu1 * mu2, "E", "M", out);
    split_or_induce(d.nm_ME, mu1 * act(mu2, d.tau_M), "E", "M", out);
    return out;
}

DistinguishingSet distinguishing_set(const RepDescriptor& r) {
    const auto& d = r.diagram;
    DistinguishingSet out;
    if (!r.is_monomial()) {
        if (!r.known_distinguished)
            throw Error(ErrorCode::InsufficientProvenance, "non-monomial parameter without distinction data");
        if (*r.known_distinguished) out.X.push_back(Character::trivial(d.F));
    } else {
        for (const auto& s : asai_of_monomial(*r.monomial).summands)
            if (s.kind == FormalSummand::Kind::Character) out.X.push_back(s.chi);
        sort_unique(out.X);
    }
    for (const auto& nu : self_twists(r))
        if (pullback_character(nu, d.up_FE).is_trivial()) out.Y.push_back(nu);
    std::set<Character> hit;
    for (const auto& chi : out.X) {
        auto img = base_change_character(chi, d);
        out.witness.emplace_back(chi, img);
        if (std::binary_search(out.Y.begin(), out.Y.end(), img)) hit.insert(img);
    }
    out.bijective = out.X.size() == out.Y.size() && hit.size() == out.Y.size();
    if (std::binary_search(out.X.begin(), out.X.end(), Character::trivial(d.F)) &&
        std::binary_search(out.X.begin(), out.X.end(), d.omega_EF))
        throw Error(ErrorCode::PreconditionFailed, "omega_{E/F} lies in the distinguishing set of a distinguished parameter");
    return out;
}

Factorizability factorizability(const RepDescriptor& r, bool distinguished) {
    if (!distinguished) throw Error(ErrorCode::NotDistinguished, "factorizability needs a distinguished parameter");
    Factorizability f;
    if (r.is_monomial() || r.known_distinguished) f.x_size = static_cast<int>(distinguishing_set(r).X.size());
    if (!r.is_monomial()) return f;
    const auto sources = quadratic_sources(r);
    if (sources.size() == 1) {
        f.factorizable = false;
        f.d = 2;
    } else if (sources.size() == 3) {
        const auto galois = std::count_if(sources.begin(), sources.end(),
                                          [](const QuadraticSource& s) { return s.galois.type != GaloisType::NonGalois; });
        if (galois == 3) {
            f.factorizable = false;
            f.d = 4;
        } else if (galois != 1) {
            throw Error(ErrorCode::InvalidSourceCount, std::to_string(galois) + " of 3 sources are Galois");
        }
    } else {
        throw Error(ErrorCode::InvalidSourceCount, std::to_string(sources.size()) + " quadratic sources");
    }
    f.d_asserted = !f.factorizable;
    f.d_matches_x = f.factorizable || f.d == f.x_size;
    return f;
}

PseudoCheck pseudo_condition_check(const MonomialDatum& m, const Character& chi) {
    const auto& d = m.diagram;
    if (!(chi.group() == d.E)) throw Error(ErrorCode::GroupMismatch, "chi must live on the E node");
    const Character ratio = chi / act(chi, d.sigma_E);
    if (ratio.is_trivial()) throw Error(ErrorCode::GaloisInvariantChi, "chi = chi^sigma; twist to reduce to the classical case");
    if (!(ratio == d.omega_ME)) throw Error(ErrorCode::PreconditionFailed, "chi/chi^sigma does not cut out M");
    const Character target = pullback_character(chi, d.nm_ME);
    const bool c5 = pullback_character(m.mu, one_plus(d.sigma_M)) == target;
    const bool c6 = pullback_character(m.mu, one_plus(d.sigma_tau_M())) == target;
    return {c5 || c6, c5 && c6 ? "both" : c5 ? "5" : c6 ? "6" : "none"};
}

Character omega_LF(const FieldDiagram& d) { return nontrivial_annihilator(d.nm_LF, "L"); }
Character omega_LpF(const FieldDiagram& d) { return nontrivial_annihilator(d.nm_LpF, "L'"); }
Character omega_ML(const FieldDiagram& d) { return nontrivial_annihilator(d.nm_ML, "M in L"); }

Json to_json(const FormalSummand& s) {
    return {{"kind", s.kind == FormalSummand::Kind::Induced ? "Ind" : "character"},
            {"node", s.node},
            {"character", to_json(s.chi)},
            {"dimension", s.dimension()}};
}

Json to_json(const AsaiDecomposition& a) {
    Json s = Json::array();
    for (const auto& x : a.summands) s.push_back(to_json(x));
    return {{"summands", s}, {"contains_trivial", a.contains_trivial}, {"dimension", a.dimension()}};
}

Json to_json(const Factorizability& f) {
    Json j{{"verdict", f.factorizable ? "Factorizable" : "NotFactorizable"}};
    if (!f.factorizable) {
        j["d"] = f.d;
        j["d_asserted"] = f.d_asserted;
    }
    j["x_size"] = f.x_size;
    return j;
}

}  // namespace periodlab
