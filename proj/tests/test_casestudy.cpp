#include "doctest.h"
#include "fixtures.hpp"

using namespace periodlab;

TEST_CASE("the 257 diagram") {
    const auto d = build_257_diagram();
    CHECK(d.L == FinAbGroup({16}));
    CHECK(d.Lp == FinAbGroup({3}));
    CHECK(d.M == FinAbGroup({24}));
    CHECK(validate_diagram(d).ok());
    // kernel {0, 8}, image of order 8
    int kernel = 0;
    std::set<GroupElem> image;
    d.L.for_each_element([&](const GroupElem& x) {
        kernel += d.up_LM(x) == d.M.zero();
        image.insert(d.up_LM(x));
    });
    CHECK(kernel == 2);
    CHECK(image.size() == 8);
    CHECK(d.up_LM(d.L.element({8})) == d.M.zero());
    // sigma is +1 on the Z/8 factor and -1 on the Z/3 factor, sigma tau the other way round
    CHECK(d.sigma_M(d.M.element({3})) == d.M.element({3}));
    CHECK(d.sigma_M(d.M.element({8})) == d.M.element({16}));
    CHECK(d.sigma_tau_M()(d.M.element({3})) == d.M.element({21}));
    CHECK(d.sigma_tau_M()(d.M.element({8})) == d.M.element({8}));
}

TEST_CASE("the 257 report") {
    const auto r = run_example_257();
    CHECK(r.passed());
    CHECK(r.verdict == "abstractly distinguished, not globally distinguished");
    std::vector<std::string> ids;
    for (const auto& c : r.checks) {
        ids.push_back(c.id);
        CHECK_FALSE(c.anchor.empty());
        CHECK(c.pass);
    }
    for (const char* id : {"a", "b", "c", "d", "e", "f", "g-split", "g-inert"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    // order of mu/mu^tau is lcm(2, 3)
    const auto d = std::find_if(r.checks.begin(), r.checks.end(), [](const CaseCheck& c) { return c.id == "d"; });
    CHECK(d->computed == "6");
    CHECK(to_json(r) == to_json(run_example_257()));
    CHECK(to_text(r).find("verdict: abstractly distinguished") != std::string::npos);
}

TEST_CASE("mutated 257 fixture: mu trivial on the Z/3 part") {
    // 6/24 extends mu' but is trivial on the image of C_L'
    const auto r = run_example_257(6);
    CHECK_FALSE(r.passed());
    const auto c = std::find_if(r.checks.begin(), r.checks.end(), [](const CaseCheck& x) { return x.id == "c"; });
    REQUIRE(c != r.checks.end());
    CHECK_FALSE(c->pass);
    CHECK(r.verdict == "checks failed");
    // 22/24 is the other valid choice
    CHECK(run_example_257(22).passed());
}

TEST_CASE("order-8 construction on the dihedral model") {
    const auto r = run_section5_case(8);
    CHECK(r.passed());
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.id);
    CHECK_THROWS_AS(run_section5_case(32), Error);
    try {
        run_section5_case(32);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FixtureTooSmall);
    }
    CHECK_FALSE(run_section5_case(4).passed());
}
