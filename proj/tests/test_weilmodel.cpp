#include "doctest.h"
#include "periodlab/weilmodel.hpp"

using namespace periodlab;

namespace {

std::vector<GroupPtr> model_groups() {
    return {build_semidirect(16, {2}, {-1}),      build_semidirect(8, {2, 2}, {-1, 1}),
            build_semidirect(8, {2, 2}, {-1, 5}), build_semidirect(12, {2, 2}, {-1, 5}),
            build_semidirect(8, {2}, {3}),        build_semidirect(6, {4}, {-1}),
            build_semidirect(9, {2, 2}, {-1, 1})};
}

}  // namespace

TEST_CASE("Weil models satisfy every diagram identity") {
    int count = 0;
    for (const auto& g : model_groups())
        for (const auto& w : weil_models(g)) {
            const auto report = validate_diagram(w.diagram);
            for (const auto& f : report.failures()) {
                bool assumption = f.name.rfind("tau-action", 0) == 0 || f.name.rfind("sigma-action", 0) == 0;
                CHECK_MESSAGE(assumption, f.name << " " << f.witness);
            }
            CHECK(w.diagram.omega_EF.order() == 2);
            CHECK(w.diagram.omega_ME.order() == 2);
            CHECK(w.M.sub.group->order() * 4 == g->order());
            ++count;
        }
    CHECK(count > 20);
}

TEST_CASE("dihedral model of order 32") {
    const auto g = build_semidirect(16, {2}, {-1});
    const auto subs = index_two_subgroups(g);
    REQUIRE(subs.size() == 3);
    // W_L cyclic of order 16, W_E dihedral, W_M = <x^2>
    const SubgroupData* cyc = nullptr;
    const SubgroupData* dih = nullptr;
    for (const auto& h : subs) (h.group->is_abelian() ? cyc : dih) = &h;
    REQUIRE(cyc);
    REQUIRE(dih);
    const auto w = build_weil_model(g, *dih, *cyc);
    CHECK(w.diagram.L == FinAbGroup({16}));
    CHECK(w.diagram.M == FinAbGroup({8}));
    CHECK(w.diagram.F == FinAbGroup({2, 2}));
    CHECK(w.diagram.E == FinAbGroup({2, 2}));
    CHECK(validate_diagram(w.diagram).ok());
    CHECK_THROWS_AS(build_weil_model(g, *cyc, *cyc), Error);
}
