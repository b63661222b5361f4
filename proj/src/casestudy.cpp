#include "periodlab/casestudy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "periodlab/localrules.hpp"
#include "periodlab/monomial.hpp"
#include "periodlab/quadclass.hpp"

namespace periodlab {

namespace {

template <class T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string invariants_str(const FinAbGroup& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.invariants().size(); ++i) s += (i ? "," : "") + std::to_string(g.invariants()[i]);
    return s + "]";
}

std::int64_t image_size(const GroupHom& h) {
    std::set<GroupElem> img;
    h.domain().for_each_element([&](const GroupElem& x) { img.insert(h(x)); });
    return static_cast<std::int64_t>(img.size());
}

std::int64_t kernel_size(const GroupHom& h) {
    std::int64_t n = 0;
    const auto z = h.codomain().zero();
    h.domain().for_each_element([&](const GroupElem& x) { n += h(x) == z; });
    return n;
}

Character unramified(const LocalPlaceModel& p, std::int64_t v) {
    std::vector<Fraction> vals(p.K_orders.size(), Fraction{0, 1});
    vals[0] = mod_one(v, p.valuation_modulus);
    if (vals.size() == 4) vals[2] = vals[0];
    return p.K_character(vals);
}

// A failing computation becomes a failing check rather than an exception.
template <class F>
std::string guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return std::string("error: ") + e.what();
    }
}

}  // namespace

bool CaseReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.pass && !c.anchor.empty(); });
}

void CaseReport::add(std::string id, std::string claim, std::string anchor, std::string computed, std::string expected) {
    const bool ok = computed == expected;
    checks.push_back({std::move(id), std::move(claim), std::move(anchor), std::move(computed), std::move(expected), ok});
}

void CaseReport::add(std::string id, std::string claim, std::string anchor, bool ok) {
    add(std::move(id), std::move(claim), std::move(anchor), ok ? "true" : "false", "true");
}

FieldDiagram build_257_diagram() {
    const auto cl = class_group(-4 * 257);
    const auto clp = real_class_group(257, false);
    if (cl.group.invariants() != std::vector<std::int64_t>{16})
        throw Error(ErrorCode::ClassGroupMismatch, "class group of Q(sqrt -257) is " + invariants_str(cl.group) + ", expected [16]");
    if (clp.group.invariants() != std::vector<std::int64_t>{3})
        throw Error(ErrorCode::ClassGroupMismatch, "class group of Q(sqrt 257) is " + invariants_str(clp.group) + ", expected [3]");

    FieldDiagram d;
    d.F = FinAbGroup::cyclic(2);
    d.E = FinAbGroup::cyclic(2);
    d.L = cl.group;
    d.Lp = clp.group;
    d.M = FinAbGroup::cyclic(24);  // Z/8 + Z/3

    auto hom = [](const FinAbGroup& a, const FinAbGroup& b, std::int64_t k) {
        return GroupHom::from_images(a, b, {b.element({k})});
    };
    d.up_FE = GroupHom::zero(d.F, d.E);
    d.up_FL = GroupHom::zero(d.F, d.L);
    d.up_FLp = GroupHom::zero(d.F, d.Lp);
    d.up_EM = GroupHom::zero(d.E, d.M);
    d.up_LM = hom(d.L, d.M, 9);     // onto the Z/8 factor, kernel {0, 8}
    d.up_LpM = hom(d.Lp, d.M, 16);  // onto the Z/3 factor
    d.nm_EF = GroupHom::zero(d.E, d.F);
    d.nm_LF = GroupHom::zero(d.L, d.F);
    d.nm_LpF = GroupHom::zero(d.Lp, d.F);
    d.nm_ME = GroupHom::zero(d.M, d.E);
    d.nm_ML = hom(d.M, d.L, 2);
    d.nm_MLp = hom(d.M, d.Lp, 2);

    d.tau_M = GroupHom::scalar(d.M, -1);  // (-1, -1)
    d.sigma_M = hom(d.M, d.M, 17);        // (+1, -1)
    d.sigma_E = GroupHom::identity(d.E);
    d.tau_L = GroupHom::scalar(d.L, -1);
    d.tau_Lp = GroupHom::scalar(d.Lp, -1);
    d.omega_EF = Character(d.F, {1});
    d.omega_ME = Character(d.E, {1});
    d.assumptions.tau_negates_subfield_images = true;
    d.assumptions.sigma_signs = true;
    return d;
}

CaseReport run_example_257(std::optional<std::int64_t> mu_numerator) {
    CaseReport rep;
    rep.title = "SL2 over Q(i): locally distinguished everywhere, no globally distinguished packet member";
    FieldDiagram d;
    try {
        d = build_257_diagram();
    } catch (const Error& e) {
        rep.add("setup", "class groups of Q(sqrt -257) and Q(sqrt 257)", "the class group $C_L$ of $L$ is ${\\Bbb Z}/16$",
                e.what(), "[16] and [3]");
        rep.verdict = "checks failed";
        return rep;
    }
    rep.add("L", "class group of L = Q(sqrt -257)", "the class group $C_L$ of $L$ is ${\\Bbb Z}/16$", invariants_str(d.L), "[16]");
    rep.add("L'", "class group of L' = Q(sqrt 257)", "the class group $C_{L'}$ of $L'$ is ${\\Bbb Z}/3$", invariants_str(d.Lp), "[3]");
    rep.add("C_L->C_M", "kernel and image of C_L -> C_M",
            "has ${\\Bbb Z}/2$ as its kernel,  and ${\\Bbb Z}/8$ as its image",
            std::to_string(kernel_size(d.up_LM)) + "," + std::to_string(image_size(d.up_LM)), "2,8");
    rep.add("C_L'->C_M", "image of C_L' -> C_M", "the image of the natural map from $C_{L'}$ to $C_M$ is ${\\Bbb Z}/3$",
            std::to_string(image_size(d.up_LpM)), "3");
    rep.add("tau", "tau acts by -1 on C_L, C_L' and their images",
            "on $C_L$ and also on $C_{L'}$ is $x \\rightarrow -x$",
            d.tau_L == GroupHom::scalar(d.L, -1) && d.tau_Lp == GroupHom::scalar(d.Lp, -1) &&
                d.tau_M.compose(d.up_LM) == GroupHom::scalar(d.M, -1).compose(d.up_LM) &&
                d.tau_M.compose(d.up_LpM) == GroupHom::scalar(d.M, -1).compose(d.up_LpM));
    const auto diag = validate_diagram(d);
    rep.add("diagram", "norm/extension/Galois identities of the model", "the unique quadratic unramified extension of $L$",
            diag.ok() ? "ok" : diag.failures().front().name, "ok");

    // (a)
    std::optional<Character> mu_p;
    for (const auto& c : enumerate_characters(d.L))
        if (c.order() == 4) {
            mu_p = c;
            break;
        }
    const auto kernel_elem = d.L.element({8});
    rep.add("a", "mu' of order 4 on C_L, trivial on the kernel {0,8}", "Such a character $\\mu'$ is trivial on the kernel",
            mu_p ? std::to_string(mu_p->numerators()[0]) + "/16 of order " + std::to_string(mu_p->order()) +
                       ((*mu_p)(kernel_elem) == Fraction{0, 1} ? ", trivial on kernel" : ", nontrivial on kernel")
                 : "none",
            "4/16 of order 4, trivial on kernel");
    if (!mu_p) {
        rep.verdict = "checks failed";
        return rep;
    }
    // (b)
    const Character ratio_p = *mu_p / act(*mu_p, d.tau_L);
    rep.add("b", "mu'/mu'^tau has order 2 and cuts out M over L", "$\\mu'/\\mu'^\\tau$ is a character of order 2",
            std::to_string(ratio_p.order()) + (ratio_p == omega_ML(d) ? " = omega_M/L" : ""), "2 = omega_M/L");

    // (c)
    std::optional<Character> mu;
    if (mu_numerator) {
        mu = Character(d.M, {*mu_numerator});
    } else {
        for (const auto& c : enumerate_characters(d.M))
            if (pullback_character(c, d.up_LM) == *mu_p && !pullback_character(c, d.up_LpM).is_trivial()) {
                mu = c;
                break;
            }
    }
    const bool extends = mu && pullback_character(*mu, d.up_LM) == *mu_p;
    const bool on3 = mu && !pullback_character(*mu, d.up_LpM).is_trivial();
    rep.add("c", "mu on C_M extends mu' and is nontrivial on the Z/3 from L'",
            "nontrivial on the ${\\Bbb Z}/3$ coming from $L'=  {\\Bbb Q}(\\sqrt{257})$",
            std::string(extends ? "extends" : "does not extend") + ", " + (on3 ? "nontrivial" : "trivial") + " on Z/3",
            "extends, nontrivial on Z/3");
    if (!mu) {
        rep.verdict = "checks failed";
        return rep;
    }
    rep.notes.push_back("mu = " + str(*mu) + " on C_M = Z/24");

    // (d)
    const Character ratio = *mu / act(*mu, d.tau_M);
    rep.add("d", "mu/mu^tau is not of order 2", "Therefore $\\mu/\\mu^\\tau$ is not of order 2", std::to_string(ratio.order()), "6");
    const bool cuspidal = !ratio.is_trivial();
    std::optional<RepDescriptor> r;
    if (cuspidal) r = RepDescriptor::from_monomial({d, *mu, std::nullopt});
    rep.add("d'", "exactly one quadratic source", "coming from exactly one quadratic extension of $E$",
            guarded([&] { return r ? std::to_string(quadratic_sources(*r).size()) : "reducible"; }), "1");

    // (e)
    const Character mm = *mu * act(*mu, d.sigma_M);
    rep.add("e", "mu mu^sigma is tau-invariant", "it is easy to see that $\\mu \\mu^\\sigma$ is a $\\tau$-invariant character",
            act(mm, d.tau_M) == mm);
    rep.add("e'", "chi/chi^sigma = omega_M/E is nontrivial, so chi != chi^sigma",
            "the quadratic character of $E$ defining the quadratic extension $M$ of $E$", !d.omega_ME.is_trivial());
    rep.notes.push_back(
        "rule: chi-tilde with mu mu^sigma = chi-tilde chi-tilde^tau exists on idele classes (Hilbert 90); the class-group "
        "model cannot exhibit it since 1 + tau vanishes on C_M");

    // (f)
    rep.add("f", "self-twists are {1, omega_M/E}: the twisting characters alpha are chi and chi^sigma only",
            "there are none with  $\\alpha^\\sigma = \\alpha$", guarded([&]() -> std::string {
                if (!r) return "reducible";
                const std::vector<Character> expected{Character::trivial(d.E), d.omega_ME};
                return self_twists(*r) == expected ? "true" : "false";
            }),
            "true");
    rep.add("f'", "no character of F occurs in the twisted tensor lift (X empty), so no packet member is distinguished",
            "none of the members of the $L$-packet",
            guarded([&] { return r ? std::to_string(distinguishing_set(*r).X.size()) : "reducible"; }), "0");

    // (g) split places
    {
        const auto p = split_place(4, 4);
        const auto chars = enumerate_characters(p.k);
        bool ok = true;
        for (const auto& a : chars)
            for (const auto& b : chars)
                for (const auto& chi1 : chars) {
                    const PrincipalSeries pi1{a, b};
                    ok &= split_place_check(pi1, pi1.dual().twist(chi1), chi1, chi1, p);
                }
        rep.add("g-split", "split places: pseudo-distinction gives pi_v1 = pi_v2^dual chi, hence local distinction",
                "local distinguishedness is automatic", ok);
    }
    // (g) inert places of Q(i)/Q: unramified Ps(chi1, chi2) and Ps(chi, chi omega)
    {
        bool ok = true;
        for (std::int64_t q : {3, 7}) {
            const auto p = inert_place(q, 4);
            const auto omega = unramified(p, 2);
            for (std::int64_t v1 = 0; v1 < 4; ++v1) {
                const auto c1 = unramified(p, v1);
                ok &= ps_sl2_distinguished(c1, c1 * omega, p).distinguished;
                for (std::int64_t v2 = 0; v2 < 4; ++v2) ok &= ps_sl2_distinguished(c1, unramified(p, v2), p).distinguished;
            }
        }
        rep.add("g-inert", "inert places: unramified principal series and Ps(chi, chi omega) are SL2(k)-distinguished",
                "is either $(\\chi_1\\chi^{-1}_2)|_{k^*} = 1$, or $(\\chi_1\\chi^{-1}_2) = (\\chi_1\\chi^{-1}_2)^\\sigma$", ok);
    }
    rep.notes.push_back("archimedean place: not modeled, assumed distinguished");
    rep.notes.push_back("rule: the locally distinguished SL2 components can be chosen automorphic (transitivity at unramified places)");

    rep.verdict = rep.passed() ? "abstractly distinguished, not globally distinguished" : "checks failed";
    return rep;
}

WeilModel dihedral32_model() {
    const auto g = build_semidirect(16, {2}, {-1});
    const auto subs = index_two_subgroups(g);
    const SubgroupData* cyc = nullptr;
    const SubgroupData* other = nullptr;
    for (const auto& h : subs) {
        if (h.group->is_abelian())
            cyc = &h;
        else if (!other)
            other = &h;
    }
    if (!cyc || !other) throw Error(ErrorCode::NoSubgroup, "dihedral model lacks the expected subgroups");
    return build_weil_model(g, *other, *cyc);
}

CaseReport run_section5_case(std::int64_t order) {
    CaseReport rep;
    rep.title = "locally distinguished SL2 representation that is not distinguished (order " + std::to_string(order) + " eta)";
    const auto w = dihedral32_model();
    const auto& d = w.diagram;
    Character eta;
    try {
        eta = construct_eta(d, order).eta;
    } catch (const Error& e) {
        throw Error(ErrorCode::FixtureTooSmall, std::string("no eta of order ") + std::to_string(order) + ": " + e.what());
    }
    rep.add("eta", "eta has the requested order and is trivial on the image of F",
            "such that $\\eta$ has trivial restriction to ${\\Bbb A}^*_F$",
            std::to_string(eta.order()) + (pullback_character(eta, d.up_FL).is_trivial() ? ", trivial on F" : ", not trivial on F"),
            std::to_string(order) + ", trivial on F");
    rep.add("eta^4", "eta^4 is nontrivial", "Since $\\eta^4 \\neq 1$", !eta.pow(4).is_trivial());

    const auto G = w.G;
    const auto ind_eta = induce_class_function(w.L.sub, w.class_function(w.L, eta));
    const auto ind_eta2 = induce_class_function(w.L.sub, w.class_function(w.L, eta.pow(2)));
    const auto rho = restrict_to(ind_eta, w.E.sub);
    rep.add("a", "Ind eta, Ind eta^2 and rho = Ind eta restricted to W_E are irreducible",
            "$\\rho_{\\tilde{\\pi}}$ is an irreducible representation",
            str(inner_product(ind_eta, ind_eta)) + "," + str(inner_product(ind_eta2, ind_eta2)) + "," + str(inner_product(rho, rho)),
            "1,1,1");

    const auto lifted = asai_class_function(w.E.sub, rho);
    const auto wL = omega_LF(d);
    const auto expected = ind_eta2 + ClassFunction::trivial(G) + w.class_function(w.F, d.omega_EF * wL);
    rep.add("b", "r(rho) = Ind(eta^2) + 1 + omega_E/F omega_L/F as class functions",
            "\\oplus 1 \\oplus \\omega_{E/F}\\omega_{L/F}", lifted == expected);
    RepDescriptor r;
    try {
        r = RepDescriptor::from_monomial(datum_from_eta(d, eta));
    } catch (const Error& e) {
        rep.add("rho", "rho restricts to an irreducible monomial parameter", "$\\rho_{\\tilde{\\pi}}$ is an irreducible representation",
                e.what(), "irreducible");
        rep.verdict = "checks failed";
        return rep;
    }
    const auto as = asai_decompose(r);
    const bool symbolic = as.summands.size() == 3 && as.summands[0].chi == eta.pow(2) && as.summands[2].chi == d.omega_EF * wL;
    rep.add("b'", "symbolic decomposition agrees", "\\oplus 1 \\oplus \\omega_{E/F}\\omega_{L/F}", symbolic);

    rep.add("c", "trivial summand present, so the GL2 representation is distinguished",
            "Since $r(\\rho_{\\tilde{\\pi}})$ contains the trivial representation",
            str(inner_product(lifted, ClassFunction::trivial(G))) + (as.contains_trivial ? ", rule fires" : ", rule silent"),
            "1, rule fires");

    const auto& mu = r.monomial->mu;
    const auto t = tensor_monomial(d, mu, act(mu, d.sigma_M));
    auto product = rho * rho.conj();
    auto total = product - product;
    std::vector<Character> chars;
    for (const auto& s : t) {
        if (s.kind == FormalSummand::Kind::Character) {
            chars.push_back(s.chi);
            total = total + w.class_function(w.E, s.chi);
        } else {
            total = total + induce_class_function(w.M_in_E, w.class_function(w.M, s.chi));
        }
    }
    rep.add("d", "rho (x) rho^sigma = rho (x) rho^dual as class functions", "\\cong \\rho_{\\tilde{\\pi}} \\otimes \\rho_{\\tilde{\\pi}}^\\vee",
            total == product);
    const auto nm_wL = base_change_character(wL, d);
    std::vector<Character> gammas;
    for (const auto& c : chars)
        if (!c.is_trivial() && !(c == nm_wL)) gammas.push_back(c);
    const auto st = self_twists(r);
    bool gamma_ok = chars.size() == 4 && gammas.size() == 2;
    for (const auto& g : gammas)
        gamma_ok = gamma_ok && !pullback_character(g, d.up_FE).is_trivial() && std::count(st.begin(), st.end(), g) == 1 &&
                   std::count(gammas.begin(), gammas.end(), act(g, d.sigma_E)) == 1;
    rep.add("d'", "summands 1, omega_L/F o Nm, gamma, gamma^sigma; gamma is a self-twist nontrivial on the image of F",
            "$\\gamma$ has non-trivial restriction to ${\\Bbb A}^*_F$", gamma_ok);
    rep.notes.push_back("eta = " + str(eta) + " on W_L^ab = " + invariants_str(d.L));

    rep.verdict = rep.passed() ? "abstractly distinguished SL2 members exist that are not distinguished" : "checks failed";
    return rep;
}

Json to_json(const CaseReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"claim", c.claim},
                          {"anchor", c.anchor},
                          {"computed", c.computed},
                          {"expected", c.expected},
                          {"pass", c.pass}});
    return {{"title", r.title}, {"checks", checks}, {"notes", r.notes}, {"verdict", r.verdict}, {"passed", r.passed()}};
}

std::string to_text(const CaseReport& r) {
    std::ostringstream os;
    os << r.title << "\n";
    int i = 1;
    for (const auto& c : r.checks) {
        os << i++ << ". [" << (c.pass ? "PASS" : "FAIL") << "] (" << c.id << ") " << c.claim << "\n"
           << "     computed: " << c.computed << "   expected: " << c.expected << "\n"
           << "     \"" << c.anchor << "\"\n";
    }
    for (const auto& n : r.notes) os << "   note: " << n << "\n";
    os << "verdict: " << r.verdict << "\n";
    return os.str();
}

}  // namespace periodlab
