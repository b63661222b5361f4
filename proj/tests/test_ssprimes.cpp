#include "doctest.h"
#include "periodlab/ssprimes.hpp"

using namespace periodlab;

namespace {

// projective points by brute force over the full equation
std::int64_t brute_points(const EllipticCurve& e, std::int64_t p) {
    std::int64_t n = 1;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t v = y * y + e.a1 * x * y + e.a3 * y - (x * x * x + e.a2 * x * x + e.a4 * x + e.a6);
            n += ((v % p) + p) % p == 0;
        }
    return n;
}

}  // namespace

TEST_CASE("point counts of y^2 = x^3 - x") {
    const auto e = EllipticCurve::make(0, 0, 0, -1, 0);
    CHECK(e.discriminant() == 64);
    CHECK(count_points(e, 3) == 4);
    CHECK(trace_of_frobenius(e, 3) == 0);
    CHECK(count_points(e, 5) == 8);
    CHECK(trace_of_frobenius(e, 5) == -2);
    CHECK_THROWS_AS(count_points(e, 2), Error);
    try {
        count_points(e, 2);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::BadReduction);
    }
    CHECK_THROWS_AS(count_points(e, 9), Error);
}

TEST_CASE("table scan against direct enumeration") {
    for (const auto& e : test_curves())
        for (auto p : primes_up_to(150))
            if (e.good_at(p)) CHECK(count_points(e, p) == brute_points(e, p));
}

TEST_CASE("two routes agree with the Hasse bound") {
    for (const auto& e : test_curves())
        for (auto p : primes_up_to(1000)) {
            if (!e.good_at(p)) continue;
            const auto ap = trace_of_frobenius(e, p);
            CHECK(ap == trace_by_character_sum(e, p));
            CHECK(ap * ap <= 4 * p);
        }
}

TEST_CASE("supersingular scan") {
    const auto e = EllipticCurve::make(0, 0, 0, -1, 0);
    std::vector<std::int64_t> got, expected;
    for (const auto& r : scan_supersingular(e, 100)) got.push_back(r.p);
    for (auto p : primes_up_to(100))
        if (p % 4 == 3) expected.push_back(p);
    CHECK(got == expected);
    CHECK(scan_supersingular(e, 2).size() <= 1);
    CHECK(scan_traces(e, 2000, 1) == scan_traces(e, 2000, 8));
    CHECK_THROWS_AS(scan_traces(e, 1), Error);
    const auto csv = scan_to_csv(scan_supersingular(e, 20));
    CHECK(csv == "p,ap,supersingular\n3,0,true\n7,0,true\n11,0,true\n19,0,true\n");
    CHECK(scan_to_json(e, 20, {}).contains("note"));
}

TEST_CASE("curve parsing") {
    CHECK(EllipticCurve::parse("0,-1,1,-10,-20").discriminant() == -161051);
    CHECK_THROWS_AS(EllipticCurve::parse("0,0,0,0,0"), Error);
    CHECK_THROWS_AS(EllipticCurve::parse("0,0,0,-1"), Error);
    CHECK_THROWS_AS(EllipticCurve::parse("0,0,0,-1,x"), Error);
    CHECK_THROWS_AS(EllipticCurve::parse("0,0,0,-1.5,0"), Error);
}
