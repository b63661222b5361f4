#include "doctest.h"

#include <random>
#include <set>

#include "periodlab/abgroup.hpp"

using namespace periodlab;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, std::vector<std::int64_t>(c));
    for (auto& row : m)
        for (auto& v : row) v = dist(rng);
    return m;
}

FinAbGroup random_group(std::mt19937& rng, int max_rank, int max_order) {
    static const std::vector<std::vector<std::int64_t>> pool = {
        {}, {2}, {3}, {4}, {6}, {8}, {12}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {2, 8}, {4, 4}, {2, 2, 2}, {2, 2, 4}, {3, 6}, {16}};
    for (;;) {
        auto inv = pool[rng() % pool.size()];
        FinAbGroup g(inv);
        if (static_cast<int>(g.rank()) <= max_rank && g.order() <= max_order) return g;
    }
}

GroupHom random_hom(std::mt19937& rng, const FinAbGroup& a, const FinAbGroup& b) {
    // Images of generators must be killed by the generator's order.
    std::vector<GroupElem> images;
    auto elems = b.elements();
    for (std::size_t j = 0; j < a.rank(); ++j) {
        for (;;) {
            const auto& y = elems[rng() % elems.size()];
            if (b.scale(y, a.invariants()[j]) == b.zero()) {
                images.push_back(y);
                break;
            }
        }
    }
    return GroupHom::from_images(a, b, images);
}

std::size_t closure_size(const FinAbGroup& g, const std::vector<GroupElem>& gens) {
    std::set<GroupElem> seen{g.zero()};
    std::vector<GroupElem> frontier{g.zero()};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& s : gens) {
            auto y = g.add(x, s);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("smith form satisfies U M V = D with divisibility") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_matrix(rng, r, c, -20, 20);
        auto s = smith_normal_form(m);
        CHECK(multiply(multiply(s.U, to_big(m)), s.V) == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        std::size_t n = std::min(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D[i][j] == 0);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(s.D[i][i] >= 0);
            if (i + 1 < n && s.D[i][i] != 0) CHECK(s.D[i + 1][i + 1] % s.D[i][i] == 0);
            if (i + 1 < n && s.D[i][i] == 0) CHECK(s.D[i + 1][i + 1] == 0);
        }
    }
    auto z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
    CHECK(z.D == to_big(IntMatrix{{0, 0}, {0, 0}}));
}

TEST_CASE("present of a square nonsingular matrix has order |det|") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t k = 1 + rng() % 3;
        auto m = random_matrix(rng, k, k, -6, 6);
        auto det = determinant(to_big(m));
        if (det == 0) {
            CHECK_THROWS_AS(present(m, k), Error);
            continue;
        }
        auto p = present(m, k);
        CHECK(BigInt(p.group.order()) == abs(det));
        // Every relation vanishes on the images.
        for (const auto& row : m) {
            GroupElem acc = p.group.zero();
            for (std::size_t j = 0; j < k; ++j) acc = p.group.add(acc, p.group.scale(p.generator_images[j], row[j]));
            CHECK(acc == p.group.zero());
        }
        CHECK(closure_size(p.group, p.generator_images) == static_cast<std::size_t>(p.group.order()));
    }
}

TEST_CASE("present recognises standard groups") {
    CHECK(from_relations({{4, 0}, {0, 6}}, 2) == FinAbGroup({2, 12}));
    CHECK(from_relations({{2, 0}, {0, 3}}, 2) == FinAbGroup({6}));
    CHECK(from_relations({{1}}, 1).is_trivial());
    CHECK_THROWS_AS(from_relations({{2, 0}}, 2), Error);
    try {
        from_relations({}, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InfiniteQuotient);
    }
}

TEST_CASE("invalid invariants are rejected") {
    CHECK_THROWS_AS(FinAbGroup({4, 6}), Error);
    CHECK_THROWS_AS(FinAbGroup({1}), Error);
    CHECK_THROWS_AS(GroupHom(FinAbGroup({4}), FinAbGroup({6}), IntMatrix{{1}}), Error);
    CHECK_NOTHROW(GroupHom(FinAbGroup({4}), FinAbGroup({6}), IntMatrix{{3}}));
}

TEST_CASE("subgroup, quotient, kernel and image agree with enumeration") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_group(rng, 3, 64);
        auto b = random_group(rng, 3, 64);
        auto f = random_hom(rng, a, b);

        std::size_t brute_kernel = 0;
        std::set<GroupElem> brute_image;
        a.for_each_element([&](const GroupElem& x) {
            auto y = f(x);
            if (y == b.zero()) ++brute_kernel;
            brute_image.insert(y);
        });
        auto ki = hom_kernel_image(f);
        CHECK(ki.kernel.group.order() == static_cast<std::int64_t>(brute_kernel));
        CHECK(ki.image.group.order() == static_cast<std::int64_t>(brute_image.size()));
        for (const auto& g : ki.kernel.group.elements()) CHECK(f(ki.kernel.embedding(g)) == b.zero());
        std::set<GroupElem> emb;
        for (const auto& g : ki.image.group.elements()) {
            auto y = ki.image.embedding(g);
            CHECK(brute_image.count(y) == 1);
            emb.insert(y);
        }
        CHECK(emb.size() == brute_image.size());

        std::vector<GroupElem> gens;
        for (std::size_t j = 0; j < a.rank(); ++j) gens.push_back(f.image_of_generator(j));
        auto q = quotient_by(b, gens);
        CHECK(q.group.order() * static_cast<std::int64_t>(brute_image.size()) == b.order());
        CHECK(q.projection.is_surjective());
        for (const auto& y : brute_image) CHECK(q.projection(y) == q.group.zero());
    }
}

TEST_CASE("characters: arithmetic and evaluation") {
    FinAbGroup g({2, 4});
    auto chi = Character::from_fractions(g, {Fraction{1, 2}, Fraction{1, 4}});
    CHECK(chi.order() == 4);
    CHECK(chi(g.element({1, 1})) == Fraction{3, 4});
    CHECK((chi * chi)(g.element({1, 1})) == Fraction{1, 2});
    CHECK((chi / chi).is_trivial());
    CHECK(chi.pow(4).is_trivial());
    auto all = enumerate_characters(g);
    CHECK(all.size() == 8);
    CHECK(all.front().is_trivial());
    CHECK_THROWS_AS(Character::from_fractions(g, {Fraction{1, 3}, Fraction{0, 1}}), Error);
    CHECK(Fraction::parse("3/12") == Fraction{1, 4});
    CHECK_THROWS_AS(Fraction::parse("x/2"), Error);
    CHECK_THROWS_AS(enumerate_characters(FinAbGroup({1000, 1000}), 100), Error);
}

TEST_CASE("pullback solving matches brute force") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_group(rng, 3, 32);
        auto b = random_group(rng, 3, 32);
        auto f = random_hom(rng, a, b);
        auto targets = enumerate_characters(a);
        const auto& target = targets[rng() % targets.size()];
        std::vector<Character> brute;
        for (const auto& chi : enumerate_characters(b))
            if (pullback_character(chi, f) == target) brute.push_back(chi);
        std::sort(brute.begin(), brute.end());
        CHECK(all_pullback_solutions(f, target) == brute);
        CHECK(solve_pullback(f, target).has_value() == !brute.empty());

        std::size_t ann = 0;
        for (const auto& chi : enumerate_characters(b))
            if (pullback_character(chi, f).is_trivial()) ++ann;
        CHECK(annihilator_of_image(f).size() == ann);
    }
}

TEST_CASE("nth roots of characters") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        auto g = random_group(rng, 3, 64);
        auto chars = enumerate_characters(g);
        const auto& chi = chars[rng() % chars.size()];
        std::int64_t n = 1 + rng() % 6;
        bool brute = false;
        for (const auto& e : chars)
            if (e.pow(n) == chi) brute = true;
        auto r = character_nth_root(chi, n);
        CHECK(r.has_value() == brute);
        if (r) CHECK(r->pow(n) == chi);
    }
}

TEST_CASE("congruence solver") {
    auto sol = solve_congruences(to_big(IntMatrix{{2, 0}, {0, 3}}), {BigInt(4), BigInt(3)}, BigInt(6));
    REQUIRE(sol);
    CHECK(((*sol)[0] * 2 - 4) % 6 == 0);
    CHECK(((*sol)[1] * 3 - 3) % 6 == 0);
    CHECK_FALSE(solve_congruences(to_big(IntMatrix{{2}}), {BigInt(1)}, BigInt(4)));
}
