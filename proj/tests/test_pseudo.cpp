#include "doctest.h"
#include "fixtures.hpp"
#include "periodlab/pseudo.hpp"

using namespace periodlab;
using namespace fixtures;

namespace {

template <class Fn>
void for_each_pseudo_fixture(Fn fn) {
    for (const auto& g : model_groups())
        for (const auto& w : weil_models(g))
            for (const auto& chi : enumerate_characters(w.diagram.E)) {
                if (!(chi / act(chi, w.diagram.sigma_E) == w.diagram.omega_ME)) continue;
                fn(w, chi);
            }
}

}  // namespace

TEST_CASE("solution sets equal the exhaustive search") {
    int n = 0;
    for_each_pseudo_fixture([&](const WeilModel& w, const Character& chi) {
        const auto& d = w.diagram;
        const auto sol = solve_mu_tilde(d, chi);
        std::vector<Character> brute;
        for (const auto& mt : enumerate_characters(d.L))
            if (pullback_character(mt, d.nm_ML) == pullback_character(chi, d.nm_ME)) brute.push_back(mt);
        std::sort(brute.begin(), brute.end());
        CHECK(sol.solutions == brute);
        CHECK(sol.solutions.size() == 2);
        CHECK(sol.solutions[1] == sol.solutions[0] * sol.omega_ML);
        CHECK(sol.partner == sol.solutions[1]);
        // ratio trivial on the norm image
        CHECK(pullback_character(sol.solutions[0] / sol.solutions[1], d.nm_ML).is_trivial());
        ++n;
    });
    CHECK(n >= 20);
}

TEST_CASE("extensions and conditions") {
    int extended = 0;
    for_each_pseudo_fixture([&](const WeilModel& w, const Character& chi) {
        const auto& d = w.diagram;
        const auto en = enumerate_pseudo_reps(d, chi);
        CHECK(en.bijection_ok);
        const auto image = hom_kernel_image(d.up_LM).image.group.order();
        CHECK(en.reps.size() + en.reducible == (2 - en.unextendable) * static_cast<std::size_t>(d.M.order() / image));
        for (const auto& m : en.reps) {
            const auto pc = pseudo_condition_check(m, chi);
            CHECK(pc.holds);
            CHECK((pc.branch == "5" || pc.branch == "both"));
        }
        // brute-force filter of the M dual by condition 5 contains every returned parameter
        const auto target = pullback_character(chi, d.nm_ME);
        std::size_t brute5 = 0;
        for (const auto& mu : enumerate_characters(d.M))
            if (mu * act(mu, d.sigma_M) == target) ++brute5;
        CHECK(brute5 >= en.reps.size() + en.reducible);
        if (en.unextendable == 0) {
            ++extended;
            CHECK(brute5 == en.reps.size() + en.reducible);
        }
    });
    CHECK(extended > 0);
}

TEST_CASE("preconditions") {
    const auto w = dihedral32();
    const auto& d = w.diagram;
    CHECK_THROWS_AS(solve_mu_tilde(d, Character::trivial(d.E)), Error);
    try {
        solve_mu_tilde(d, Character::trivial(d.E));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionFailed);
    }
    CHECK_THROWS_AS(solve_mu_tilde(d, Character::trivial(d.F)), Error);
}
