#include <random>

#include "doctest.h"
#include "periodlab/error.hpp"
#include "periodlab/oracle_rep.hpp"

using namespace periodlab;

namespace {

// element-level induction formula, summing over all of G
Cyclo induce_by_definition(const SubgroupData& h, const ClassFunction& f, int g) {
    const auto& G = *h.parent;
    Cyclo acc(G.conductor());
    for (int x = 0; x < G.order(); ++x) {
        const int y = G.mul(G.mul(G.inv(x), g), x);
        if (h.contains(y)) acc = acc + f(h.from_parent[y]);
    }
    return acc * Rational(1, h.group->order());
}

Rational inner_by_elements(const ClassFunction& a, const ClassFunction& b) {
    const auto& G = *a.group();
    Cyclo acc(G.conductor());
    for (int x = 0; x < G.order(); ++x) acc = acc + a(x) * b(x).conj();
    return (acc * Rational(1, G.order())).to_rational();
}

std::vector<GroupPtr> model_groups() {
    std::vector<GroupPtr> out;
    out.push_back(build_semidirect(3, {2}, {-1}));
    out.push_back(build_semidirect(4, {2}, {-1}));
    out.push_back(build_semidirect(5, {2}, {-1}));
    out.push_back(build_semidirect(8, {2}, {-1}));
    out.push_back(build_semidirect(8, {2}, {3}));
    out.push_back(build_semidirect(8, {2}, {5}));
    out.push_back(build_semidirect(12, {2}, {-1}));
    out.push_back(build_semidirect(16, {2}, {-1}));
    out.push_back(build_semidirect(8, {2, 2}, {-1, 1}));
    out.push_back(build_semidirect(8, {2, 2}, {-1, 5}));
    out.push_back(build_semidirect(12, {2, 2}, {-1, 5}));
    out.push_back(build_semidirect(24, {2, 2}, {-1, 7}));
    out.push_back(build_semidirect(48, {2, 2}, {-1, 1}));
    out.push_back(build_semidirect(6, {4}, {-1}));
    return out;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
    const auto z = Cyclo::root(8, 1);
    CHECK(z * z * z * z == Cyclo::rational(8, -1));
    CHECK(z * z.conj() == Cyclo::rational(8, 1));
    Cyclo sum(12);
    for (int k = 0; k < 12; ++k) sum = sum + Cyclo::root(12, k);
    CHECK(sum.is_zero());
    const auto w = Cyclo::root(3, 1);
    CHECK(w + w * w == Cyclo::rational(3, -1));
    CHECK(Cyclo::from_fraction(12, {1, 4}) == Cyclo::root(12, 3));
    CHECK_THROWS_AS(Cyclo::from_fraction(12, {1, 8}), Error);
    CHECK_THROWS_AS(Cyclo::rational(3, 1) + Cyclo::rational(4, 1), Error);
}

TEST_CASE("group tables are validated") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2, 0}}), Error);
    CHECK_NOTHROW(FiniteGroup({{0, 1}, {1, 0}}));
}

TEST_CASE("semidirect products") {
    const auto s3 = build_semidirect(3, {2}, {-1});
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    CHECK(s3->num_classes() == 3);
    const auto d8 = build_semidirect(8, {2}, {-1});
    CHECK(d8->order() == 16);
    CHECK(d8->num_classes() == 7);
    const auto g32 = build_semidirect(8, {2, 2}, {-1, 1});
    CHECK(g32->order() == 32);
    CHECK(abelianize(*g32).group.order() == 8);
    CHECK_THROWS_AS(build_semidirect(8, {2}, {2}), Error);
    CHECK_THROWS_AS(build_semidirect(7, {2}, {2}), Error);
    CHECK_THROWS_AS(build_semidirect(8, {2}, {}), Error);
    // (x, a) * (y, b) = (x + u^a y, a + b)
    const int x = semidirect_index(8, {2}, 1, {0});
    const int t = semidirect_index(8, {2}, 0, {1});
    CHECK(d8->mul(t, x) == semidirect_index(8, {2}, 7, {1}));
    CHECK(d8->mul(x, t) == semidirect_index(8, {2}, 1, {1}));
}

TEST_CASE("inner products of basic characters") {
    for (const auto& g : model_groups()) {
        const auto one = ClassFunction::trivial(g);
        CHECK(inner_product(one, one) == 1);
        CHECK(inner_product(ClassFunction::regular(g), one) == 1);
        const auto lin = linear_characters(g);
        CHECK(static_cast<int>(lin.size()) == abelianize(*g).group.order());
        for (std::size_t i = 0; i < lin.size(); ++i)
            for (std::size_t j = 0; j < lin.size(); ++j) CHECK(inner_product(lin[i], lin[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("S3: induction from the rotation subgroup") {
    const auto s3 = build_semidirect(3, {2}, {-1});
    const auto subs = index_two_subgroups(s3);
    REQUIRE(subs.size() == 1);
    const auto& h = subs[0];
    CHECK(h.group->order() == 3);
    const auto triv = induce_class_function(h, ClassFunction::trivial(h.group));
    CHECK(triv == ClassFunction::trivial(s3) + omega_of(h));
    for (const auto& f : linear_characters(h.group)) {
        const auto ind = induce_class_function(h, f);
        const bool trivial_f = f == ClassFunction::trivial(h.group);
        CHECK(inner_product(ind, ind) == (trivial_f ? 2 : 1));
        if (trivial_f) continue;
        // the 2-dimensional irreducible: orthogonal to both linear characters, values 2, -1, 0
        for (const auto& l : linear_characters(s3)) CHECK(inner_product(ind, l) == 0);
        CHECK(ind(s3->identity()) == Cyclo::rational(6, 2));
        CHECK(ind(semidirect_index(3, {2}, 1, {0})) == Cyclo::rational(6, -1));
        CHECK(ind(semidirect_index(3, {2}, 0, {1})).is_zero());
    }
    CHECK(two_dim_irreducibles(s3).size() == 1);
}

TEST_CASE("dihedral 2-dimensional irreducibles are counted correctly") {
    // D_{2m} with m even has m/2 - 1 two-dimensional irreducibles and 4 linear characters
    for (int m : {4, 8, 12, 16}) {
        const auto g = build_semidirect(m, {2}, {-1});
        CHECK(linear_characters(g).size() == 4);
        const auto irr = two_dim_irreducibles(g);
        CHECK(static_cast<int>(irr.size()) == m / 2 - 1);
        Rational total = 4;
        total += 4 * static_cast<int>(irr.size());
        CHECK(total == 2 * m);
    }
}

TEST_CASE("induction matches the definition and Frobenius reciprocity") {
    std::mt19937 rng(11);
    int trials = 0;
    for (const auto& g : model_groups()) {
        const auto subs = index_two_subgroups(g);
        std::vector<ClassFunction> test_fns = linear_characters(g);
        for (const auto& v : two_dim_irreducibles(g)) test_fns.push_back(v);
        for (const auto& h : subs) {
            auto fs = linear_characters(h.group);
            std::shuffle(fs.begin(), fs.end(), rng);
            if (fs.size() > 4) fs.resize(4);
            for (const auto& f : fs) {
                const auto ind = induce_class_function(h, f);
                for (int x = 0; x < g->order(); ++x) CHECK(ind(x) == induce_by_definition(h, f, x));
                for (const auto& t : test_fns) CHECK(inner_product(ind, t) == inner_product(f, restrict_to(t, h)));
                CHECK(inner_product(ind, ind) == inner_by_elements(ind, ind));
                // irreducible iff f differs from its conjugate
                const int s = [&] {
                    for (int x = 0; x < g->order(); ++x)
                        if (!h.contains(x)) return x;
                    return -1;
                }();
                const auto fs_conj = ClassFunction::from_elements(
                    h.group, [&](int y) { return f(h.from_parent[g->conj(h.to_parent[y], s)]); });
                CHECK((inner_product(ind, ind) == 1) == !(fs_conj == f));
                ++trials;
            }
        }
    }
    CHECK(trials >= 100);
}

TEST_CASE("Asai lift: twisted tensor identity on all model groups") {
    for (const auto& g : model_groups()) {
        REQUIRE(g->order() <= 192);
        std::vector<ClassFunction> vs = linear_characters(g);
        for (const auto& v : two_dim_irreducibles(g)) vs.push_back(v);
        for (const auto& h : index_two_subgroups(g)) {
            const auto om = omega_of(h);
            for (const auto& v : vs) {
                const auto lhs = asai_class_function(h, restrict_to(v, h));
                CHECK(lhs == sym2(v) + alt2(v) * om);
            }
            CHECK(asai_class_function(h, ClassFunction::trivial(h.group)) == ClassFunction::trivial(g));
        }
    }
}

TEST_CASE("Asai lift on H is the conjugate tensor square") {
    const auto g = build_semidirect(8, {2, 2}, {-1, 5});
    for (const auto& h : index_two_subgroups(g)) {
        int s = 0;
        while (h.contains(s)) ++s;
        std::vector<ClassFunction> fs = linear_characters(h.group);
        for (const auto& v : two_dim_irreducibles(h.group)) fs.push_back(v);
        for (const auto& f : fs) {
            const auto a = asai_class_function(h, f);
            for (int y = 0; y < h.group->order(); ++y) {
                const int x = h.to_parent[y];
                CHECK(a(x) == f(y) * f(h.from_parent[g->mul(g->mul(s, x), g->inv(s))]));
            }
        }
    }
}

TEST_CASE("restriction and induction reject foreign class functions") {
    const auto s3 = build_semidirect(3, {2}, {-1});
    const auto d8 = build_semidirect(8, {2}, {-1});
    const auto h = index_two_subgroups(s3)[0];
    CHECK_THROWS_AS(induce_class_function(h, ClassFunction::trivial(d8)), Error);
    CHECK_THROWS_AS(restrict_to(ClassFunction::trivial(d8), h), Error);
    CHECK_THROWS_AS(inner_product(ClassFunction::trivial(s3), ClassFunction::trivial(d8)), Error);
    const auto c3 = make_subgroup(s3, {0, 1, 2});
    CHECK(c3.group->order() == 3);
    CHECK_THROWS_AS(make_subgroup(s3, {0, 3, 1}), Error);
}
