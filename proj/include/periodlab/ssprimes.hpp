#pragma once

// Traces of Frobenius of elliptic curves over Q by point counting, and a
// scanner for primes with a_p = 0.

#include <string>
#include <vector>

#include "periodlab/abgroup.hpp"
#include "periodlab/abgroup_json.hpp"

namespace periodlab {

struct EllipticCurve {
    std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    /// Throws PreconditionFailed for a singular equation.
    static EllipticCurve make(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, std::int64_t a6);
    /// "a1,a2,a3,a4,a6"; throws ParseError.
    static EllipticCurve parse(const std::string& text);

    BigInt discriminant() const;
    bool good_at(std::int64_t p) const;
    std::string str() const;
};

struct TraceRecord {
    std::int64_t p = 0;
    std::int64_t ap = 0;
    bool supersingular = false;

    bool operator==(const TraceRecord&) const = default;
};

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// #E(F_p) including the point at infinity, by a square-table scan. Throws BadReduction.
std::int64_t count_points(const EllipticCurve& e, std::int64_t p);
std::int64_t trace_of_frobenius(const EllipticCurve& e, std::int64_t p);

/// Independent route: -sum_x (f(x)/p) on the short model y^2 = x^3 - 27 c4 x - 54 c6 for p > 3,
/// exhaustive enumeration of the full equation for p = 2, 3.
std::int64_t trace_by_character_sum(const EllipticCurve& e, std::int64_t p);

/// Record for one good prime; throws PreconditionFailed if the Hasse bound fails.
TraceRecord trace_record(const EllipticCurve& e, std::int64_t p);

/// Records for all good primes p <= bound in ascending order; identical for every jobs value.
std::vector<TraceRecord> scan_traces(const EllipticCurve& e, std::int64_t bound, int jobs = 1);
/// The subset with a_p = 0.
std::vector<TraceRecord> scan_supersingular(const EllipticCurve& e, std::int64_t bound, int jobs = 1);

/// The five curves used by the two-route checks.
std::vector<EllipticCurve> test_curves();

Json to_json(const TraceRecord& r);
Json scan_to_json(const EllipticCurve& e, std::int64_t bound, const std::vector<TraceRecord>& records);
std::string scan_to_csv(const std::vector<TraceRecord>& records);

}  // namespace periodlab
