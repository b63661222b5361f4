#include "periodlab/weilmodel.hpp"

namespace periodlab {

namespace {

WeilNode make_node(const GroupPtr& G, const std::vector<int>& elems) {
    WeilNode n;
    n.sub = make_subgroup(G, elems);
    n.ab = abelianize(*n.sub.group);
    return n;
}

// an element of G representing generator j of the node's abelianization
int generator_lift(const WeilNode& n, std::size_t j) {
    const auto gen = n.ab.group.generator(j);
    return n.sub.to_parent[n.ab.section[n.ab.group.index_of(gen)]];
}

GroupElem image_in(const WeilNode& n, int g) {
    const int local = n.sub.from_parent[g];
    if (local < 0) throw Error(ErrorCode::PreconditionFailed, "element outside the node subgroup");
    return n.ab.image[local];
}

GroupHom induced_by(const WeilNode& from, const WeilNode& to, const std::function<int(int)>& f) {
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < from.ab.group.rank(); ++j) images.push_back(image_in(to, f(generator_lift(from, j))));
    return GroupHom::from_images(from.ab.group, to.ab.group, images);
}

GroupHom inclusion(const WeilNode& small, const WeilNode& big) {
    return induced_by(small, big, [](int g) { return g; });
}

// transfer from big to an index-2 subgroup small; g -> g s^-1 g s on small, g^2 off it
GroupHom transfer(const FiniteGroup& G, const WeilNode& big, const WeilNode& small) {
    int s = -1;
    for (int x : big.sub.to_parent)
        if (!small.sub.contains(x)) {
            s = x;
            break;
        }
    return induced_by(big, small, [&](int g) {
        if (small.sub.contains(g)) return G.mul(g, G.mul(G.mul(G.inv(s), g), s));
        return G.mul(g, g);
    });
}

GroupHom conjugation(const FiniteGroup& G, const WeilNode& n, int by) {
    return induced_by(n, n, [&](int g) { return G.conj(g, by); });
}

// the sign character of big / small on the abelianization of big
Character sign_character(const WeilNode& big, const WeilNode& small) {
    std::vector<Fraction> comps;
    for (std::size_t j = 0; j < big.ab.group.rank(); ++j)
        comps.push_back(small.sub.contains(generator_lift(big, j)) ? Fraction{0, 1} : Fraction{1, 2});
    return Character::from_fractions(big.ab.group, comps);
}

}  // namespace

ClassFunction WeilModel::class_function(const WeilNode& node, const Character& chi) const {
    return linear_character(node.sub.group, node.ab, chi);
}

WeilModel build_weil_model(const GroupPtr& G, const SubgroupData& W_E, const SubgroupData& W_L) {
    if (W_E.parent != G || W_L.parent != G) throw Error(ErrorCode::NoSubgroup, "subgroups of another group");
    if (2 * W_E.group->order() != G->order() || 2 * W_L.group->order() != G->order())
        throw Error(ErrorCode::NoSubgroup, "W_E and W_L must have index 2");
    if (W_E.to_parent == W_L.to_parent) throw Error(ErrorCode::NoSubgroup, "W_E and W_L coincide");

    WeilModel w;
    w.G = G;
    std::vector<int> all(G->order()), lp, m;
    for (int g = 0; g < G->order(); ++g) {
        all[g] = g;
        if (W_E.contains(g) == W_L.contains(g)) lp.push_back(g);
        if (W_E.contains(g) && W_L.contains(g)) m.push_back(g);
    }
    w.F.sub = SubgroupData{G, G, all, all};
    w.F.ab = abelianize(*G);
    w.E = make_node(G, W_E.to_parent);
    w.L = make_node(G, W_L.to_parent);
    w.Lp = make_node(G, lp);
    w.M = make_node(G, m);
    // same group object as the M node, so class functions on either agree
    w.M_in_E = SubgroupData{w.E.sub.group, w.M.sub.group, {}, std::vector<int>(w.E.sub.group->order(), -1)};
    for (int i = 0; i < w.M.sub.group->order(); ++i) {
        const int e = w.E.sub.from_parent[w.M.sub.to_parent[i]];
        w.M_in_E.to_parent.push_back(e);
        w.M_in_E.from_parent[e] = i;
    }
    for (int g = 0; g < G->order(); ++g) {
        if (W_L.contains(g) && !W_E.contains(g)) w.sigma_lift = g;
        if (W_E.contains(g) && !W_L.contains(g)) w.tau_lift = g;
    }

    const auto& g = *G;
    auto& d = w.diagram;
    d.F = w.F.ab.group;
    d.E = w.E.ab.group;
    d.L = w.L.ab.group;
    d.Lp = w.Lp.ab.group;
    d.M = w.M.ab.group;
    d.up_FE = transfer(g, w.F, w.E);
    d.up_FL = transfer(g, w.F, w.L);
    d.up_FLp = transfer(g, w.F, w.Lp);
    d.up_EM = transfer(g, w.E, w.M);
    d.up_LM = transfer(g, w.L, w.M);
    d.up_LpM = transfer(g, w.Lp, w.M);
    d.nm_EF = inclusion(w.E, w.F);
    d.nm_LF = inclusion(w.L, w.F);
    d.nm_LpF = inclusion(w.Lp, w.F);
    d.nm_ME = inclusion(w.M, w.E);
    d.nm_ML = inclusion(w.M, w.L);
    d.nm_MLp = inclusion(w.M, w.Lp);
    d.sigma_M = conjugation(g, w.M, w.sigma_lift);
    d.tau_M = conjugation(g, w.M, w.tau_lift);
    d.sigma_E = conjugation(g, w.E, w.sigma_lift);
    d.tau_L = conjugation(g, w.L, w.tau_lift);
    d.tau_Lp = conjugation(g, w.Lp, w.sigma_lift);
    d.omega_EF = sign_character(w.F, w.E);
    d.omega_ME = sign_character(w.E, w.M);
    return w;
}

std::vector<WeilModel> weil_models(const GroupPtr& G) {
    const auto subs = index_two_subgroups(G);
    std::vector<WeilModel> out;
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j)
            if (i != j) out.push_back(build_weil_model(G, subs[i], subs[j]));
    return out;
}

}  // namespace periodlab
