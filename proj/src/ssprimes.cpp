#include "periodlab/ssprimes.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace periodlab {

namespace {

std::int64_t md(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b = md(b, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t legendre(std::int64_t a, std::int64_t p) {
    a = md(a, p);
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// affine points of the full Weierstrass equation, by enumeration
std::int64_t exhaustive_affine(const EllipticCurve& e, std::int64_t p) {
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = y * y + e.a1 * x * y + e.a3 * y;
            const std::int64_t rhs = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
            n += md(lhs - rhs, p) == 0;
        }
    return n;
}

struct BInv {
    std::int64_t b2, b4, b6;  // mod p
};

BInv b_invariants(const EllipticCurve& e, std::int64_t p) {
    const std::int64_t a1 = md(e.a1, p), a2 = md(e.a2, p), a3 = md(e.a3, p), a4 = md(e.a4, p), a6 = md(e.a6, p);
    return {md(a1 * a1 + 4 * a2, p), md(2 * a4 + a1 * a3, p), md(a3 * a3 + 4 * a6, p)};
}

void check_good(const EllipticCurve& e, std::int64_t p) {
    if (p < 2) throw Error(ErrorCode::PreconditionFailed, "p must be prime");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorCode::PreconditionFailed, std::to_string(p) + " is not prime");
    if (!e.good_at(p)) throw Error(ErrorCode::BadReduction, e.str() + " has bad reduction at " + std::to_string(p));
}

std::int64_t points_unchecked(const EllipticCurve& e, std::int64_t p) {
    if (p <= 3) return 1 + exhaustive_affine(e, p);
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const auto b = b_invariants(e, p);
    auto add = [p](std::int64_t a, std::int64_t b) { return a + b >= p ? a + b - p : a + b; };
    std::vector<std::uint8_t> roots(p, 0);
    for (std::int64_t y = 0, sq = 0; y < p; ++y) {
        ++roots[sq];
        sq = add(sq, md(2 * y + 1, p));
    }
    // forward differences of the cubic
    std::int64_t f = b.b6, d1 = md(4 + b.b2 + 2 * b.b4, p), d2 = md(24 + 2 * b.b2, p);
    const std::int64_t d3 = 24 % p;
    std::int64_t n = 1;
    for (std::int64_t x = 0; x < p; ++x) {
        n += roots[f];
        f = add(f, d1);
        d1 = add(d1, d2);
        d2 = add(d2, d3);
    }
    return n;
}

}  // namespace

EllipticCurve EllipticCurve::make(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4, std::int64_t a6) {
    EllipticCurve e{a1, a2, a3, a4, a6};
    if (e.discriminant() == 0) throw Error(ErrorCode::PreconditionFailed, "singular curve " + e.str());
    return e;
}

EllipticCurve EllipticCurve::parse(const std::string& text) {
    std::vector<std::int64_t> a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
        }
        if (used != item.size()) throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
        a.push_back(v);
    }
    if (a.size() != 5) throw Error(ErrorCode::ParseError, "expected five coefficients a1,a2,a3,a4,a6");
    return make(a[0], a[1], a[2], a[3], a[4]);
}

BigInt EllipticCurve::discriminant() const {
    const BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    const BigInt b2 = A1 * A1 + 4 * A2, b4 = 2 * A4 + A1 * A3, b6 = A3 * A3 + 4 * A6;
    const BigInt b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool EllipticCurve::good_at(std::int64_t p) const { return discriminant() % p != 0; }

std::string EllipticCurve::str() const {
    std::ostringstream os;
    os << "[" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6 << "]";
    return os.str();
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::int64_t count_points(const EllipticCurve& e, std::int64_t p) {
    check_good(e, p);
    return points_unchecked(e, p);
}

std::int64_t trace_of_frobenius(const EllipticCurve& e, std::int64_t p) { return p + 1 - count_points(e, p); }

std::int64_t trace_by_character_sum(const EllipticCurve& e, std::int64_t p) {
    check_good(e, p);
    if (p <= 3) return p - exhaustive_affine(e, p);
    const auto b = b_invariants(e, p);
    const std::int64_t c4 = md(b.b2 * b.b2 - 24 * b.b4, p);
    const std::int64_t c6 = md(-(b.b2 * b.b2 % p) * b.b2 + 36 * (b.b2 * b.b4 % p) - 216 * b.b6, p);
    const std::int64_t A = md(-27 * c4, p), B = md(-54 * c6, p);
    std::int64_t s = 0;
    for (std::int64_t x = 0; x < p; ++x) s += legendre((x * x % p * x + A * x + B) % p, p);
    return -s;
}

TraceRecord trace_record(const EllipticCurve& e, std::int64_t p) {
    const std::int64_t ap = trace_of_frobenius(e, p);
    if (ap * ap > 4 * p) throw Error(ErrorCode::PreconditionFailed, "Hasse bound violated at p = " + std::to_string(p));
    return {p, ap, ap == 0};
}

std::vector<TraceRecord> scan_traces(const EllipticCurve& e, std::int64_t bound, int jobs) {
    if (bound < 2) throw Error(ErrorCode::PreconditionFailed, "bound must be at least 2");
    std::vector<std::int64_t> primes;
    for (auto p : primes_up_to(bound))
        if (e.good_at(p)) primes.push_back(p);
    std::vector<TraceRecord> out(primes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) out[i] = trace_record(e, primes[i]);
    };
    const int n = std::max(1, jobs);
    if (n == 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex m;
    for (int t = 0; t < n; ++t)
        pool.emplace_back([&] {
            try {
                work();
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!failure) failure = std::current_exception();
                next = primes.size();
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<TraceRecord> scan_supersingular(const EllipticCurve& e, std::int64_t bound, int jobs) {
    std::vector<TraceRecord> out;
    for (const auto& r : scan_traces(e, bound, jobs))
        if (r.supersingular) out.push_back(r);
    return out;
}

std::vector<EllipticCurve> test_curves() {
    return {EllipticCurve::make(0, 0, 0, -1, 0), EllipticCurve::make(0, -1, 1, -10, -20), EllipticCurve::make(0, 0, 1, -1, 0),
            EllipticCurve::make(1, 0, 1, 4, -6), EllipticCurve::make(0, 0, 0, 0, 1)};
}

Json to_json(const TraceRecord& r) { return {{"p", r.p}, {"ap", r.ap}, {"supersingular", r.supersingular}}; }

Json scan_to_json(const EllipticCurve& e, std::int64_t bound, const std::vector<TraceRecord>& records) {
    Json rs = Json::array();
    for (const auto& r : records) rs.push_back(to_json(r));
    return {{"curve", {e.a1, e.a2, e.a3, e.a4, e.a6}},
            {"discriminant", e.discriminant().str()},
            {"bound", bound},
            {"records", rs},
            {"note", "finite evidence only; whether a_p = 0 for infinitely many p is not decided by a scan"}};
}

std::string scan_to_csv(const std::vector<TraceRecord>& records) {
    std::ostringstream os;
    os << "p,ap,supersingular\n";
    for (const auto& r : records) os << r.p << "," << r.ap << "," << (r.supersingular ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace periodlab
