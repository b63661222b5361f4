#include "doctest.h"
#include "fixtures.hpp"

using namespace periodlab;
using namespace fixtures;

TEST_CASE("self-twists agree with the class-function test") {
    int n = 0;
    for_each_monomial([&](const MonomialFixture& f) {
        const auto& d = f.model.diagram;
        const auto r = RepDescriptor::from_monomial({d, f.mu, std::nullopt});
        const auto st = self_twists(r);
        const auto ind = induced_parameter(f.model, f.mu);
        std::vector<Character> brute;
        for (const auto& nu : enumerate_characters(d.E))
            if (ind * f.model.class_function(f.model.E, nu) == ind) brute.push_back(nu);
        std::sort(brute.begin(), brute.end());
        CHECK(st == brute);
        CHECK((st.size() == 2 || st.size() == 4));
        CHECK(contains(st, d.omega_ME));
        CHECK(st.size() == ((act(f.mu, d.tau_M) / f.mu).order() == 2 ? 4u : 2u));
        for (const auto& a : st)
            for (const auto& b : st) CHECK(contains(st, a * b));
        const auto src = quadratic_sources(r);
        CHECK(src.size() + 1 == st.size());
        ++n;
        return n < 400;
    });
    CHECK(n >= 100);
}

TEST_CASE("non-monomial descriptors") {
    const auto w = dihedral32();
    const auto r = RepDescriptor::non_monomial(w.diagram, "cuspidal", true);
    CHECK(self_twists(r) == std::vector<Character>{Character::trivial(w.diagram.E)});
    const auto ds = distinguishing_set(r);
    CHECK(ds.X == std::vector<Character>{Character::trivial(w.diagram.F)});
    CHECK(ds.bijective);
    CHECK(factorizability(r, true).factorizable);
    CHECK_THROWS_AS(distinguishing_set(RepDescriptor::non_monomial(w.diagram, "unknown", std::nullopt)), Error);
    CHECK_THROWS_AS(factorizability(r, false), Error);
}

TEST_CASE("reducible parameters are rejected") {
    const auto w = dihedral32();
    CHECK_THROWS_AS(RepDescriptor::from_monomial({w.diagram, Character::trivial(w.diagram.M), std::nullopt}), Error);
}

TEST_CASE("twisted tensor decomposition matches the oracle") {
    int n = 0;
    for_each_monomial([&](const MonomialFixture& f) {
        const MonomialDatum m{f.model.diagram, f.mu, std::nullopt};
        const auto as = asai_of_monomial(m);
        CHECK(as.dimension() == 4);
        const auto lifted = asai_class_function(f.model.E.sub, induced_parameter(f.model, f.mu));
        CHECK(sum_of(f.model, f.model.G, as.summands) == lifted);
        CHECK(as.contains_trivial == is_distinguished(f.model, f.mu));
        ++n;
        return true;
    });
    CHECK(n >= 100);
}

TEST_CASE("order-32 model: eta of order 8 and the decomposition Ind(eta^2) + 1 + omega_E omega_L") {
    const auto w = dihedral32();
    const auto& d = w.diagram;
    const auto eta = construct_eta(d, 8).eta;
    CHECK(eta.order() == 8);
    const auto r = RepDescriptor::from_monomial(datum_from_eta(d, eta));
    const auto as = asai_decompose(r);
    REQUIRE(as.summands.size() == 3);
    CHECK(as.dimension() == 4);
    CHECK(as.contains_trivial);
    CHECK(as.summands[0].kind == FormalSummand::Kind::Induced);
    CHECK(as.summands[0].chi == eta.pow(2));
    CHECK(as.summands[2].chi == d.omega_EF * omega_LF(d));
    const auto ind = induce_class_function(w.L.sub, w.class_function(w.L, eta));
    CHECK(sum_of(w, w.G, as.summands) == asai_class_function(w.E.sub, restrict_to(ind, w.E.sub)));
    // the general formula agrees with the specialised one
    CHECK(sum_of(w, w.G, asai_of_monomial(*r.monomial).summands) == sum_of(w, w.G, as.summands));
    // three sources: omega_{M/E} is biquadratic, the self-twists gamma are not Galois over F
    const auto src = quadratic_sources(r);
    REQUIRE(src.size() == 3);
    for (const auto& s : src)
        CHECK((s.galois.type == GaloisType::Biquadratic) == (s.omega == d.omega_ME));
    CHECK(factorizability(r, true).factorizable);
    CHECK_THROWS_AS(asai_decompose(RepDescriptor::from_monomial({d, r.monomial->mu, std::nullopt})), Error);
}

TEST_CASE("tensor products of monomial parameters") {
    const auto w = dihedral32();
    const auto& d = w.diagram;
    for (const auto& mu1 : enumerate_characters(d.M))
        for (const auto& mu2 : enumerate_characters(d.M)) {
            const auto t = tensor_monomial(d, mu1, mu2);
            const auto prod = induced_parameter(w, mu1) * induced_parameter(w, mu2);
            CHECK(sum_of(w, w.E.sub.group, t) == prod);
            int dim = 0;
            for (const auto& s : t) dim += s.dimension();
            CHECK(dim == 4);
        }
    for (const auto& mu : enumerate_characters(d.M)) {
        const auto t = tensor_monomial(d, mu, mu.inverse());
        bool one = false, om = false;
        for (const auto& s : t)
            if (s.kind == FormalSummand::Kind::Character) {
                one |= s.chi.is_trivial();
                om |= s.chi == d.omega_ME;
            }
        CHECK(one);
        CHECK(om);
    }
    // pi (x) pi^sigma for the order-8 eta: 1, omega_{L/F} o Nm and a pair gamma, gamma^sigma nontrivial on F
    const auto eta = construct_eta(d, 8).eta;
    const auto mu = datum_from_eta(d, eta).mu;
    const auto t = tensor_monomial(d, mu, act(mu, d.sigma_M));
    std::vector<Character> chars;
    for (const auto& s : t)
        if (s.kind == FormalSummand::Kind::Character) chars.push_back(s.chi);
    REQUIRE(chars.size() == 4);
    CHECK(contains(chars, Character::trivial(d.E)));
    CHECK(contains(chars, base_change_character(omega_LF(d), d)));
    int gammas = 0;
    for (const auto& c : chars) {
        if (c.is_trivial() || c == base_change_character(omega_LF(d), d)) continue;
        CHECK(contains(chars, act(c, d.sigma_E)));
        CHECK_FALSE(pullback_character(c, d.up_FE).is_trivial());
        ++gammas;
    }
    CHECK(gammas == 2);
}

TEST_CASE("distinguishing sets: symbolic against brute force") {
    int distinguished = 0, total = 0;
    for_each_monomial([&](const MonomialFixture& f) {
        const auto r = RepDescriptor::from_monomial({f.model.diagram, f.mu, std::nullopt});
        const auto bx = brute_X(f.model, f.mu);
        const auto by = brute_Y(f.model, f.mu);
        const bool dist = contains(bx, Character::trivial(f.model.diagram.F));
        if (dist && contains(bx, f.model.diagram.omega_EF)) {
            FAIL("omega_{E/F} in X for a distinguished parameter");
            return true;
        }
        const auto ds = distinguishing_set(r);
        CHECK(ds.X == bx);
        CHECK(ds.Y == by);
        if (dist) {
            ++distinguished;
            CHECK(ds.bijective);
            CHECK((ds.X.size() == 2 || ds.X.size() == 4));
        }
        ++total;
        return true;
    });
    CHECK(distinguished >= 100);
    CHECK(total > distinguished);
}

TEST_CASE("factorizability verdicts for the four families") {
    const auto w = dihedral32();
    CHECK(factorizability(RepDescriptor::non_monomial(w.diagram, "cuspidal", true), true).factorizable);

    const auto unique = find_fixture(1, 1);
    const auto one_galois = find_fixture(3, 1);
    const auto all_galois = find_fixture(3, 3);
    REQUIRE(unique);
    REQUIRE(one_galois);
    REQUIRE(all_galois);
    auto verdict = [](const MonomialFixture& f) {
        return factorizability(RepDescriptor::from_monomial({f.model.diagram, f.mu, std::nullopt}), true);
    };
    const auto a = verdict(*unique);
    CHECK_FALSE(a.factorizable);
    CHECK(a.d == 2);
    CHECK(a.x_size == 2);
    CHECK(a.d_asserted);
    const auto b = verdict(*one_galois);
    CHECK(b.factorizable);
    const auto c = verdict(*all_galois);
    CHECK_FALSE(c.factorizable);
    CHECK(c.d == 4);
    CHECK(c.x_size == 4);
    CHECK(c.d_matches_x);
}

TEST_CASE("d equals |X| on every distinguished fixture") {
    for_each_monomial([&](const MonomialFixture& f) {
        if (!is_distinguished(f.model, f.mu)) return true;
        const auto v = factorizability(RepDescriptor::from_monomial({f.model.diagram, f.mu, std::nullopt}), true);
        if (!v.factorizable) CHECK(v.d == v.x_size);
        return true;
    });
}

TEST_CASE("pseudo conditions") {
    const auto w = dihedral32();
    const auto& d = w.diagram;
    const auto mu = datum_from_eta(d, construct_eta(d, 8).eta).mu;
    const MonomialDatum m{d, mu, std::nullopt};
    CHECK_THROWS_AS(pseudo_condition_check(m, Character::trivial(d.E)), Error);
    try {
        pseudo_condition_check(m, Character::trivial(d.E));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GaloisInvariantChi);
    }
    int checked = 0;
    for (const auto& g : model_groups())
        for (const auto& wm : weil_models(g)) {
            const auto& dd = wm.diagram;
            for (const auto& chi : enumerate_characters(dd.E)) {
                if (!(chi / act(chi, dd.sigma_E) == dd.omega_ME)) continue;
                const auto target = pullback_character(chi, dd.nm_ME);
                for (const auto& mu2 : enumerate_characters(dd.M)) {
                    if (act(mu2, dd.tau_M) == mu2) continue;
                    const auto pc = pseudo_condition_check({dd, mu2, std::nullopt}, chi);
                    const bool c5 = mu2 * act(mu2, dd.sigma_M) == target;
                    const bool c6 = mu2 * act(mu2, dd.sigma_tau_M()) == target;
                    CHECK(pc.holds == (c5 || c6));
                    CHECK((pc.branch == "5" || pc.branch == "both") == c5);
                    ++checked;
                }
            }
        }
    CHECK(checked > 50);
}
