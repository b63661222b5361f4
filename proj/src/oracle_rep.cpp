#include "periodlab/oracle_rep.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace periodlab {

namespace {

struct CycloTables {
    std::vector<std::int64_t> phi_poly;  // monic, low degree first
    std::vector<std::vector<std::int64_t>> powers;  // zeta^k reduced, k < N
};

[[noreturn]] void overflow() { throw Error(ErrorCode::PreconditionFailed, "cyclotomic coefficient overflow"); }

std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

std::int64_t ck_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t coef = num[i];
        q[i - dn] = coef;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
    }
    return q;
}

std::vector<std::int64_t> cyclotomic_poly(int n) {
    static std::map<int, std::vector<std::int64_t>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(mu);
    cache[n] = p;
    return p;
}

std::vector<std::int64_t> reduce_mod(std::vector<std::int64_t> full, const std::vector<std::int64_t>& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = full.size(); i-- > deg;) {
        const std::int64_t coef = full[i];
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j]) full[i - deg + j] = ck_add(full[i - deg + j], -ck_mul(coef, phi[j]));
    }
    full.resize(deg);
    return full;
}

const CycloTables& tables(int n) {
    static std::map<int, CycloTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycloTables t;
    t.phi_poly = cyclotomic_poly(n);
    for (int k = 0; k < n; ++k) {
        std::vector<std::int64_t> full(std::max<std::size_t>(n, t.phi_poly.size()), 0);
        full[k] = 1;
        t.powers.push_back(reduce_mod(full, t.phi_poly));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

void same_conductor(const Cyclo& a, const Cyclo& b) {
    if (a.conductor() != b.conductor()) throw Error(ErrorCode::GroupMismatch, "cyclotomic values with different conductors");
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) overflow();
    return static_cast<std::int64_t>(x);
}

}  // namespace

Cyclo::Cyclo(int conductor) : n_(conductor) {
    if (conductor < 1) throw Error(ErrorCode::InvalidOrder, "conductor must be positive");
    c_.assign(tables(conductor).phi_poly.size() - 1, 0);
}

void Cyclo::normalize() {
    std::int64_t g = den_;
    for (auto v : c_) g = std::gcd(g, v);
    if (g < 0) g = -g;
    if (den_ < 0) g = -g;
    if (g != 1 && g != 0) {
        for (auto& v : c_) v /= g;
        den_ /= g;
    }
    if (std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; })) den_ = 1;
}

Cyclo Cyclo::rational(int conductor, const Rational& q) {
    Cyclo z(conductor);
    z.c_[0] = to_int64(boost::multiprecision::numerator(q));
    z.den_ = to_int64(boost::multiprecision::denominator(q));
    z.normalize();
    return z;
}

Cyclo Cyclo::root(int conductor, std::int64_t k) {
    Cyclo z(conductor);
    z.c_ = tables(conductor).powers[mod_floor(k, conductor)];
    return z;
}

Cyclo Cyclo::from_fraction(int conductor, const Fraction& f) {
    if (conductor % f.den != 0)
        throw Error(ErrorCode::GroupMismatch, "root of unity of order " + std::to_string(f.den) + " outside Q(zeta_" +
                                                  std::to_string(conductor) + ")");
    return root(conductor, f.num * (conductor / f.den));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    same_conductor(*this, o);
    Cyclo r(n_);
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t fa = o.den_ / g, fb = den_ / g;
    r.den_ = ck_mul(den_, fa);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = ck_add(ck_mul(c_[i], fa), ck_mul(o.c_[i], fb));
    if (g != 1) r.normalize();
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + o * Rational(-1); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    same_conductor(*this, o);
    std::vector<std::int64_t> full(c_.size() * 2, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) full[i + j] = ck_add(full[i + j], ck_mul(c_[i], o.c_[j]));
    }
    Cyclo r(n_);
    r.c_ = reduce_mod(std::move(full), tables(n_).phi_poly);
    r.den_ = ck_mul(den_, o.den_);
    r.normalize();
    return r;
}

Cyclo Cyclo::operator*(const Rational& q) const {
    Cyclo r = *this;
    const std::int64_t qn = to_int64(boost::multiprecision::numerator(q));
    const std::int64_t qd = to_int64(boost::multiprecision::denominator(q));
    for (auto& v : r.c_) v = ck_mul(v, qn);
    r.den_ = ck_mul(r.den_, qd);
    r.normalize();
    return r;
}

Cyclo Cyclo::conj() const {
    Cyclo r(n_);
    const auto& pw = tables(n_).powers;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& z = pw[(n_ - static_cast<int>(k)) % n_];
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z[i]) r.c_[i] = ck_add(r.c_[i], ck_mul(c_[k], z[i]));
    }
    r.den_ = den_;
    return r;
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t q) { return q == 0; });
}

bool Cyclo::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t q) { return q == 0; });
}

Rational Cyclo::to_rational() const {
    if (!is_rational()) throw Error(ErrorCode::PreconditionFailed, "cyclotomic value is not rational");
    return Rational(c_[0], den_);
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z) {
    bool first = true;
    for (std::size_t k = 0; k < z.numerators().size(); ++k) {
        const auto q = Rational(z.numerators()[k], z.denominator());
        if (q == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << q;
        if (k) os << "*z^" << k;
    }
    if (first) os << 0;
    return os;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int conductor) : mul_(std::move(table)) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
    for (const auto& row : mul_) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::NotAGroup, "table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error(ErrorCode::NotAGroup, "table entry out of range");
    }
    id_ = -1;
    for (int e = 0; e < n && id_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw Error(ErrorCode::NotAGroup, "no identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == id_) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0 || mul_[inv_[a]][a] != id_) throw Error(ErrorCode::NotAGroup, "element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = mul_[a][b];
            for (int c = 0; c < n; ++c)
                if (mul_[ab][c] != mul_[a][mul_[b][c]]) throw Error(ErrorCode::NotAGroup, "table is not associative");
        }
    ord_.assign(n, 0);
    exp_ = 1;
    for (int a = 0; a < n; ++a) {
        int k = 1, x = a;
        while (x != id_) {
            x = mul_[x][a];
            ++k;
        }
        ord_[a] = k;
        exp_ = std::lcm(exp_, k);
    }
    conductor_ = conductor == 0 ? exp_ : conductor;
    if (conductor_ % exp_ != 0) throw Error(ErrorCode::NotAGroup, "conductor must be a multiple of the exponent");
    class_of_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (class_of_[g] >= 0) continue;
        std::set<int> cls;
        for (int x = 0; x < n; ++x) cls.insert(conj(g, x));
        const int idx = static_cast<int>(classes_.size());
        for (int y : cls) class_of_[y] = idx;
        classes_.emplace_back(cls.begin(), cls.end());
    }
}

int FiniteGroup::pow(int a, std::int64_t k) const {
    k = mod_floor(k, ord_[a]);
    int x = id_;
    for (std::int64_t i = 0; i < k; ++i) x = mul_[x][a];
    return x;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<int> out{id_}, frontier{id_};
    seen[id_] = 1;
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int s : gens) {
            int y = mul_[x][s];
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
                frontier.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
    std::set<int> comm;
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b) comm.insert(mul_[mul_[a][b]][mul_[inv_[a]][inv_[b]]]);
    return closure({comm.begin(), comm.end()});
}

SubgroupData make_subgroup(const GroupPtr& parent, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    SubgroupData s;
    s.from_parent.assign(parent->order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 0 || elems[i] >= parent->order()) throw Error(ErrorCode::NoSubgroup, "element out of range");
        s.from_parent[elems[i]] = static_cast<int>(i);
    }
    if (elems.empty() || s.from_parent[parent->identity()] < 0) throw Error(ErrorCode::NoSubgroup, "identity missing");
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int k = s.from_parent[parent->mul(elems[i], elems[j])];
            if (k < 0) throw Error(ErrorCode::NoSubgroup, "subset is not closed");
            table[i][j] = k;
        }
    s.to_parent = std::move(elems);
    s.parent = parent;
    s.group = std::make_shared<FiniteGroup>(std::move(table), parent->conductor());
    return s;
}

Abelianization abelianize(const FiniteGroup& g) {
    const auto derived = g.derived_subgroup();
    const int n = g.order();
    std::vector<int> coset(n, -1), reps;
    for (int x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        const int idx = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int d : derived) coset[g.mul(x, d)] = idx;
    }
    const std::size_t q = reps.size();
    std::vector<std::vector<std::size_t>> table(q, std::vector<std::size_t>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) table[i][j] = static_cast<std::size_t>(coset[g.mul(reps[i], reps[j])]);
    Abelianization ab;
    std::vector<GroupElem> elem_of;
    ab.group = group_from_cayley(table, static_cast<std::size_t>(coset[g.identity()]), elem_of);
    ab.image.resize(n);
    for (int x = 0; x < n; ++x) ab.image[x] = elem_of[coset[x]];
    ab.section.assign(q, -1);
    for (std::size_t i = 0; i < q; ++i) ab.section[static_cast<std::size_t>(ab.group.index_of(elem_of[i]))] = reps[i];
    return ab;
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclo> values) : g_(std::move(g)), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != g_->num_classes())
        throw Error(ErrorCode::GroupMismatch, "one value per conjugacy class required");
}

ClassFunction ClassFunction::from_elements(GroupPtr g, const std::function<Cyclo(int)>& value_at,
                                           bool check_classes) {
    std::vector<Cyclo> vals;
    for (const auto& cls : g->classes()) {
        Cyclo v = value_at(cls.front());
        if (check_classes)
            for (int x : cls)
                if (!(value_at(x) == v)) throw Error(ErrorCode::PreconditionFailed, "function is not a class function");
        vals.push_back(v);
    }
    return ClassFunction(std::move(g), std::move(vals));
}

ClassFunction ClassFunction::trivial(GroupPtr g) {
    std::vector<Cyclo> vals(g->num_classes(), Cyclo::rational(g->conductor(), 1));
    return ClassFunction(std::move(g), std::move(vals));
}

ClassFunction ClassFunction::regular(GroupPtr g) {
    std::vector<Cyclo> vals(g->num_classes(), Cyclo(g->conductor()));
    vals[g->class_of(g->identity())] = Cyclo::rational(g->conductor(), g->order());
    return ClassFunction(std::move(g), std::move(vals));
}

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != b.group()) throw Error(ErrorCode::GroupMismatch, "class functions on different groups");
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    same_group(*this, o);
    std::vector<Cyclo> vals;
    for (std::size_t i = 0; i < v_.size(); ++i) vals.push_back(v_[i] + o.v_[i]);
    return ClassFunction(g_, std::move(vals));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    same_group(*this, o);
    std::vector<Cyclo> vals;
    for (std::size_t i = 0; i < v_.size(); ++i) vals.push_back(v_[i] - o.v_[i]);
    return ClassFunction(g_, std::move(vals));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    same_group(*this, o);
    std::vector<Cyclo> vals;
    for (std::size_t i = 0; i < v_.size(); ++i) vals.push_back(v_[i] * o.v_[i]);
    return ClassFunction(g_, std::move(vals));
}

ClassFunction ClassFunction::conj() const {
    std::vector<Cyclo> vals;
    for (const auto& v : v_) vals.push_back(v.conj());
    return ClassFunction(g_, std::move(vals));
}

ClassFunction ClassFunction::power_map(int k) const {
    std::vector<Cyclo> vals;
    for (const auto& cls : g_->classes()) vals.push_back((*this)(g_->pow(cls.front(), k)));
    return ClassFunction(g_, std::move(vals));
}

bool ClassFunction::operator==(const ClassFunction& o) const { return g_ == o.g_ && v_ == o.v_; }

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    same_group(f, g);
    const auto& G = *f.group();
    Cyclo acc(G.conductor());
    for (int c = 0; c < G.num_classes(); ++c)
        acc = acc + (f.at_class(c) * g.at_class(c).conj()) * Rational(static_cast<std::int64_t>(G.classes()[c].size()));
    if (!acc.is_rational()) throw Error(ErrorCode::PreconditionFailed, "inner product is not rational");
    return acc.to_rational() / G.order();
}

namespace {

int outside_element(const SubgroupData& h) {
    if (2 * h.group->order() != h.parent->order()) throw Error(ErrorCode::NoSubgroup, "subgroup does not have index 2");
    for (int g = 0; g < h.parent->order(); ++g)
        if (!h.contains(g)) return g;
    throw Error(ErrorCode::NoSubgroup, "subgroup is everything");
}

void on_subgroup(const SubgroupData& h, const ClassFunction& f) {
    if (f.group() != h.group) throw Error(ErrorCode::GroupMismatch, "class function is not on the subgroup");
}

}  // namespace

ClassFunction restrict_to(const ClassFunction& f, const SubgroupData& h) {
    if (f.group() != h.parent) throw Error(ErrorCode::GroupMismatch, "class function is not on the parent group");
    return ClassFunction::from_elements(h.group, [&](int x) { return f(h.to_parent[x]); }, false);
}

ClassFunction induce_class_function(const SubgroupData& h, const ClassFunction& f) {
    on_subgroup(h, f);
    const auto& G = h.parent;
    const int s = outside_element(h);
    return ClassFunction::from_elements(G, [&](int g) {
        if (!h.contains(g)) return Cyclo(G->conductor());
        return f(h.from_parent[g]) + f(h.from_parent[G->mul(G->mul(G->inv(s), g), s)]);
    }, false);
}

ClassFunction asai_class_function(const SubgroupData& h, const ClassFunction& f) {
    on_subgroup(h, f);
    const auto& G = h.parent;
    const int s = outside_element(h);
    return ClassFunction::from_elements(G, [&](int g) {
        if (h.contains(g)) return f(h.from_parent[g]) * f(h.from_parent[G->conj(g, s)]);
        return f(h.from_parent[G->mul(g, g)]);
    }, false);
}

ClassFunction sym2(const ClassFunction& f) {
    const auto sq = f.power_map(2);
    return ClassFunction::from_elements(f.group(), [&](int g) {
        return (f(g) * f(g) + sq(g)) * Rational(1, 2);
    }, false);
}

ClassFunction alt2(const ClassFunction& f) {
    const auto sq = f.power_map(2);
    return ClassFunction::from_elements(f.group(), [&](int g) {
        return (f(g) * f(g) - sq(g)) * Rational(1, 2);
    }, false);
}

ClassFunction omega_of(const SubgroupData& h) {
    const int N = h.parent->conductor();
    return ClassFunction::from_elements(h.parent, [&](int g) { return Cyclo::rational(N, h.contains(g) ? 1 : -1); }, false);
}

ClassFunction linear_character(const GroupPtr& g, const Abelianization& ab, const Character& chi) {
    if (!(chi.group() == ab.group)) throw Error(ErrorCode::GroupMismatch, "character not on the abelianization");
    return ClassFunction::from_elements(g, [&](int x) { return Cyclo::from_fraction(g->conductor(), chi(ab.image[x])); }, false);
}

std::vector<ClassFunction> linear_characters(const GroupPtr& g) {
    auto ab = abelianize(*g);
    std::vector<ClassFunction> out;
    for_each_character(ab.group, [&](const Character& chi) { out.push_back(linear_character(g, ab, chi)); });
    return out;
}

std::vector<SubgroupData> index_two_subgroups(const GroupPtr& g) {
    auto ab = abelianize(*g);
    std::vector<SubgroupData> out;
    for_each_character(ab.group, [&](const Character& chi) {
        if (chi.order() != 2) return;
        std::vector<int> kernel;
        for (int x = 0; x < g->order(); ++x)
            if (chi(ab.image[x]).num == 0) kernel.push_back(x);
        out.push_back(make_subgroup(g, kernel));
    });
    return out;
}

std::vector<ClassFunction> two_dim_irreducibles(const GroupPtr& g) {
    std::vector<ClassFunction> out;
    for (const auto& h : index_two_subgroups(g))
        for (const auto& lambda : linear_characters(h.group)) {
            auto ind = induce_class_function(h, lambda);
            if (inner_product(ind, ind) != 1) continue;
            if (std::find(out.begin(), out.end(), ind) == out.end()) out.push_back(ind);
        }
    return out;
}

int semidirect_index(std::int64_t m, const std::vector<std::int64_t>& acting, std::int64_t x,
                     const std::vector<std::int64_t>& a) {
    std::int64_t idx = 0;
    for (std::size_t i = acting.size(); i > 0; --i) idx = idx * acting[i - 1] + mod_floor(a[i - 1], acting[i - 1]);
    return static_cast<int>(mod_floor(x, m) + m * idx);
}

GroupPtr build_semidirect(std::int64_t m, const std::vector<std::int64_t>& acting,
                          const std::vector<std::int64_t>& multipliers) {
    if (m < 1 || acting.size() != multipliers.size())
        throw Error(ErrorCode::InvalidAction, "need one multiplier per acting generator");
    std::int64_t na = 1;
    for (std::size_t i = 0; i < acting.size(); ++i) {
        if (acting[i] < 1) throw Error(ErrorCode::InvalidAction, "acting orders must be positive");
        const std::int64_t u = mod_floor(multipliers[i], m);
        if (std::gcd(u, m) != 1 && m > 1) throw Error(ErrorCode::InvalidAction, "multiplier is not a unit");
        std::int64_t p = 1;
        for (std::int64_t k = 0; k < acting[i]; ++k) p = p * u % m;
        if (m > 1 && p != 1 % m) throw Error(ErrorCode::InvalidAction, "multiplier order does not divide the acting order");
        na *= acting[i];
    }
    const std::int64_t n = m * na;
    if (n > 4096) throw Error(ErrorCode::GroupTooLarge, "semidirect product too large for a table");
    // decode acting coordinates, first coordinate fastest
    std::vector<std::vector<std::int64_t>> coords(na);
    std::vector<std::int64_t> phi(na);
    for (std::int64_t idx = 0; idx < na; ++idx) {
        std::int64_t r = idx, u = 1 % m;
        for (std::size_t i = 0; i < acting.size(); ++i) {
            coords[idx].push_back(r % acting[i]);
            for (std::int64_t k = 0; k < r % acting[i]; ++k) u = u * mod_floor(multipliers[i], m) % m;
            r /= acting[i];
        }
        phi[idx] = u;
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::int64_t g = 0; g < n; ++g)
        for (std::int64_t h = 0; h < n; ++h) {
            const std::int64_t x1 = g % m, a1 = g / m, x2 = h % m, a2 = h / m;
            std::vector<std::int64_t> a(acting.size());
            for (std::size_t i = 0; i < acting.size(); ++i) a[i] = coords[a1][i] + coords[a2][i];
            table[g][h] = semidirect_index(m, acting, x1 + phi[a1] * x2, a);
        }
    return std::make_shared<FiniteGroup>(std::move(table));
}

}  // namespace periodlab
