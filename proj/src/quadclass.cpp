#include "periodlab/quadclass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace periodlab {

namespace {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// x*a + y*b = g >= 0
std::int64_t xgcd64(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

std::array<std::int64_t, 4> mat_mul(const std::array<std::int64_t, 4>& m, const std::array<std::int64_t, 4>& n) {
    return {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2],
            m[2] * n[1] + m[3] * n[3]};
}

bool is_square(std::int64_t n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

bool squarefree(std::int64_t n) {
    n = std::abs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

bool QuadForm::is_primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

QuadForm apply_transform(const QuadForm& f, const std::array<std::int64_t, 4>& m) {
    const auto [p, q, r, s] = m;
    return {f.a * p * p + f.b * p * r + f.c * r * r, 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
            f.a * q * q + f.b * q * s + f.c * s * s};
}

bool is_reduced_definite(const QuadForm& f) {
    if (std::abs(f.b) > f.a || f.a > f.c) return false;
    if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

Reduction reduce_form(const QuadForm& f) {
    if (!f.is_primitive()) throw Error(ErrorCode::NonPrimitive, "form is not primitive");
    if (f.discriminant() >= 0 || f.a <= 0)
        throw Error(ErrorCode::IndefiniteInDefiniteRoutine, "form is not positive definite");
    Reduction r{f, {1, 0, 0, 1}};
    const std::array<std::int64_t, 4> S{0, -1, 1, 0};
    for (;;) {
        auto& g = r.form;
        std::int64_t k = (g.a - g.b) >= 0 ? (g.a - g.b) / (2 * g.a) : -((g.b - g.a + 2 * g.a - 1) / (2 * g.a));
        if (k != 0) {
            std::array<std::int64_t, 4> T{1, k, 0, 1};
            g = apply_transform(g, T);
            r.transform = mat_mul(r.transform, T);
        }
        if (g.a > g.c) {
            g = apply_transform(g, S);
            r.transform = mat_mul(r.transform, S);
            continue;
        }
        break;
    }
    if (r.form.a == r.form.c && r.form.b < 0) {
        r.form = apply_transform(r.form, S);
        r.transform = mat_mul(r.transform, S);
    }
    return r;
}

bool is_reduced_indefinite(const QuadForm& f) {
    const std::int64_t D = f.discriminant();
    if (D <= 0) return false;
    const std::int64_t s = isqrt(D);
    const std::int64_t a2 = 2 * std::abs(f.a);
    if (f.b <= 0 || f.b > s) return false;
    const std::int64_t lo = a2 + f.b;  // sqrt(D) < 2|a| + b
    if (lo <= 0 || lo * lo <= D) return false;
    const std::int64_t hi = a2 - f.b;  // 2|a| - b < sqrt(D)
    if (hi >= 0 && hi * hi >= D) return false;
    return true;
}

QuadForm rho(const QuadForm& f) {
    const std::int64_t D = f.discriminant();
    if (D <= 0 || is_square(D)) throw Error(ErrorCode::NotQuadratic, "rho needs a non-square positive discriminant");
    if (f.c == 0) throw Error(ErrorCode::NotQuadratic, "form with c = 0");
    const std::int64_t s = isqrt(D);
    const std::int64_t m = 2 * std::abs(f.c);
    std::int64_t r;
    if (std::abs(f.c) > s) {
        // -|c| < r <= |c|
        r = mod_floor(-f.b, m);
        if (r > std::abs(f.c)) r -= m;
    } else {
        // largest r < sqrt(D), i.e. r <= s, with r = -b mod 2|c|
        r = s - mod_floor(s + f.b, m);
    }
    return {f.c, r, (r * r - D) / (4 * f.c)};
}

QuadForm reduce_indefinite(const QuadForm& f) {
    QuadForm g = f;
    for (int i = 0; i < 100000; ++i) {
        if (is_reduced_indefinite(g)) return g;
        g = rho(g);
    }
    throw Error(ErrorCode::PreconditionFailed, "indefinite reduction did not terminate");
}

QuadForm compose_classes(const QuadForm& f, const QuadForm& g) {
    const std::int64_t D = f.discriminant();
    if (g.discriminant() != D) throw Error(ErrorCode::DiscriminantMismatch, "forms have different discriminants");
    if (!f.is_primitive() || !g.is_primitive()) throw Error(ErrorCode::NonPrimitive, "composition needs primitive forms");
    QuadForm f1 = f, f2 = g;
    if (std::abs(f1.a) > std::abs(f2.a)) std::swap(f1, f2);
    const std::int64_t s = (f1.b + f2.b) / 2;
    const std::int64_t n = f2.b - s;
    std::int64_t u, v;
    const std::int64_t d = xgcd64(f2.a, f1.a, u, v);
    const std::int64_t y1 = u;
    std::int64_t x2, y2;
    const std::int64_t d1 = xgcd64(s, d, x2, y2);
    y2 = -y2;
    const std::int64_t v1 = f1.a / d1, v2 = f2.a / d1;
    const std::int64_t r = mod_floor(y1 * y2 * n - x2 * f2.c, std::abs(v1));
    const std::int64_t b3 = f2.b + 2 * v2 * r;
    const std::int64_t a3 = v1 * v2;
    const __int128 num = static_cast<__int128>(b3) * b3 - D;
    if (num % (4 * a3) != 0) throw Error(ErrorCode::PreconditionFailed, "composition produced a non-integral form");
    QuadForm h{a3, b3, static_cast<std::int64_t>(num / (4 * a3))};
    if (D < 0) return reduce_form(h).form;
    return reduce_indefinite(h);
}

QuadForm principal_form(std::int64_t D) {
    if (mod_floor(D, 4) == 0) return {1, 0, -D / 4};
    if (mod_floor(D, 4) == 1) return {1, 1, (1 - D) / 4};
    throw Error(ErrorCode::NotQuadratic, "discriminant must be 0 or 1 mod 4");
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    n = std::abs(n);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0 || D == 1 || is_square(D)) return false;
    const std::int64_t r = mod_floor(D, 4);
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    const std::int64_t m = D / 4;
    const std::int64_t rm = mod_floor(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
}

std::vector<QuadForm> reduced_forms(std::int64_t D) {
    std::vector<QuadForm> out;
    if (D < 0) {
        for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
            for (std::int64_t b = -a + 1; b <= a; ++b) {
                if (mod_floor(b - D, 2) != 0) continue;
                const std::int64_t num = b * b - D;
                if (num % (4 * a) != 0) continue;
                QuadForm f{a, b, num / (4 * a)};
                if (f.c < a || !f.is_primitive() || !is_reduced_definite(f)) continue;
                out.push_back(f);
            }
    } else {
        const std::int64_t s = isqrt(D);
        for (std::int64_t b = 1; b <= s; ++b) {
            if (mod_floor(b - D, 2) != 0) continue;
            const std::int64_t m = (D - b * b) / 4;
            for (std::int64_t a = 1; a <= m; ++a) {
                if (m % a) continue;
                for (std::int64_t sign : {1, -1}) {
                    QuadForm f{sign * a, b, -sign * (m / a)};
                    if (f.is_primitive() && is_reduced_indefinite(f)) out.push_back(f);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t FormClassGroup::class_index(const QuadForm& f) const {
    if (f.discriminant() != discriminant) throw Error(ErrorCode::DiscriminantMismatch, "form has the wrong discriminant");
    if (discriminant < 0) {
        auto g = reduce_form(f).form;
        auto it = std::lower_bound(representatives.begin(), representatives.end(), g);
        if (it == representatives.end() || !(*it == g))
            throw Error(ErrorCode::ClassGroupMismatch, "reduced form missing from the table");
        return static_cast<std::size_t>(it - representatives.begin());
    }
    auto it = cycle_of.find(reduce_indefinite(f));
    if (it == cycle_of.end()) throw Error(ErrorCode::ClassGroupMismatch, "reduced form missing from the cycles");
    return narrow_to_ordinary.at(it->second);
}

GroupElem FormClassGroup::element_of(const QuadForm& f) const { return elem_of.at(class_index(f)); }

FormClassGroup class_group(std::int64_t D) {
    if (D >= 0) throw Error(ErrorCode::IndefiniteInDefiniteRoutine, "class_group needs D < 0");
    if (!is_fundamental_discriminant(D))
        throw Error(ErrorCode::NotFundamental, std::to_string(D) + " is not a fundamental discriminant");
    FormClassGroup cg;
    cg.discriminant = D;
    cg.representatives = reduced_forms(D);
    const std::size_t h = cg.representatives.size();
    std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
            auto k = cg.class_index(compose_classes(cg.representatives[i], cg.representatives[j]));
            table[i][j] = table[j][i] = k;
        }
    cg.group = group_from_cayley(table, cg.class_index(principal_form(D)), cg.elem_of);
    if (cg.group.order() != static_cast<std::int64_t>(h))
        throw Error(ErrorCode::ClassGroupMismatch, "Cayley table does not define a group of order h");
    return cg;
}

FormClassGroup real_class_group(std::int64_t D, bool narrow) {
    if (D <= 0) throw Error(ErrorCode::NotQuadratic, "real_class_group needs D > 0");
    if (!is_fundamental_discriminant(D))
        throw Error(ErrorCode::NotFundamental, std::to_string(D) + " is not a fundamental discriminant");
    FormClassGroup nar;
    nar.discriminant = D;
    nar.narrow = true;
    std::vector<QuadForm> forms = reduced_forms(D);
    for (const auto& f : forms) {
        if (nar.cycle_of.count(f)) continue;
        const std::size_t idx = nar.representatives.size();
        nar.representatives.push_back(f);
        QuadForm g = f;
        do {
            nar.cycle_of[g] = idx;
            g = rho(g);
        } while (!(g == f));
    }
    const std::size_t h = nar.representatives.size();
    nar.narrow_to_ordinary.resize(h);
    std::iota(nar.narrow_to_ordinary.begin(), nar.narrow_to_ordinary.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j)
            table[i][j] = table[j][i] = nar.class_index(compose_classes(nar.representatives[i], nar.representatives[j]));
    nar.group = group_from_cayley(table, nar.class_index(principal_form(D)), nar.elem_of);
    if (nar.group.order() != static_cast<std::int64_t>(h))
        throw Error(ErrorCode::ClassGroupMismatch, "Cayley table does not define a group of order h");
    if (narrow) return nar;

    const std::int64_t delta = mod_floor(D, 2);
    const QuadForm minus_one{-1, delta, (D - delta * delta) / 4};
    Quotient q = quotient_by(nar.group, {nar.element_of(minus_one)});
    FormClassGroup ord;
    ord.discriminant = D;
    ord.narrow = false;
    ord.group = q.group;
    ord.cycle_of = nar.cycle_of;
    ord.narrow_to_ordinary.resize(h);
    std::map<GroupElem, std::size_t> seen;
    for (std::size_t i = 0; i < h; ++i) {
        GroupElem e = q.projection(nar.elem_of[i]);
        auto it = seen.find(e);
        if (it == seen.end()) {
            it = seen.emplace(e, ord.representatives.size()).first;
            ord.representatives.push_back(nar.representatives[i]);
            ord.elem_of.push_back(e);
        }
        ord.narrow_to_ordinary[i] = it->second;
    }
    return ord;
}

FundamentalUnit fundamental_unit(std::int64_t D) {
    if (D <= 0 || !is_fundamental_discriminant(D))
        throw Error(ErrorCode::NotFundamental, std::to_string(D) + " is not a positive fundamental discriminant");
    const std::int64_t s = isqrt(D);
    const std::int64_t b = mod_floor(D, 2);
    std::int64_t P = b, Q = 2;
    BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    std::int64_t P1 = 0, Q1 = 0;
    for (std::size_t k = 0;; ++k) {
        const std::int64_t a = (P + s) / Q;
        BigInt p = a * p_prev + p_prev2, q = a * q_prev + q_prev2;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
        if (k == 0) {
            P1 = P;
            Q1 = Q;
        } else if (P == P1 && Q == Q1) {
            // k is the period length; p_prev, q_prev hold the convergent at index k
            FundamentalUnit u;
            u.period = k;
            // the unit comes from the convergent just before the period closes
            const BigInt& pl = p_prev2;
            const BigInt& ql = q_prev2;
            u.x = 2 * pl - b * ql;
            u.y = ql;
            BigInt n = u.x * u.x - D * u.y * u.y;
            u.norm = n > 0 ? 1 : -1;
            if (n != 4 * u.norm) throw Error(ErrorCode::PreconditionFailed, "continued fraction did not give a unit");
            return u;
        }
    }
}

std::size_t two_rank(const FinAbGroup& g) {
    return static_cast<std::size_t>(
        std::count_if(g.invariants().begin(), g.invariants().end(), [](std::int64_t d) { return d % 2 == 0; }));
}

}  // namespace periodlab
