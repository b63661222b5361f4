#include "doctest.h"
#include "periodlab/selftest.hpp"

using namespace periodlab;

TEST_CASE("single suites") {
    for (int id : {1, 7, 9}) {
        const auto r = run_suite(id, 2);
        CHECK_MESSAGE(r.passed, r.detail);
        CHECK(r.id == id);
        CHECK_FALSE(r.name.empty());
        CHECK(to_json(r)["passed"] == true);
    }
}

TEST_CASE("unknown suites fail without throwing") {
    const auto r = run_suite(42);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("error") == 0);
}
