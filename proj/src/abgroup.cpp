#include "periodlab/abgroup.hpp"

#include <algorithm>
#include <limits>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace periodlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
        case ErrorCode::IllFormedHom: return "IllFormedHom";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::InvalidGroup: return "InvalidGroup";
        case ErrorCode::NonPrimitive: return "NonPrimitive";
        case ErrorCode::IndefiniteInDefiniteRoutine: return "IndefiniteInDefiniteRoutine";
        case ErrorCode::DiscriminantMismatch: return "DiscriminantMismatch";
        case ErrorCode::NotFundamental: return "NotFundamental";
        case ErrorCode::NotQuadratic: return "NotQuadratic";
        case ErrorCode::NoSuchCharacter: return "NoSuchCharacter";
        case ErrorCode::ModelTooSmall: return "ModelTooSmall";
        case ErrorCode::MissingOrigin: return "MissingOrigin";
        case ErrorCode::InsufficientProvenance: return "InsufficientProvenance";
        case ErrorCode::NotDistinguished: return "NotDistinguished";
        case ErrorCode::InvalidSourceCount: return "InvalidSourceCount";
        case ErrorCode::GaloisInvariantChi: return "GaloisInvariantChi";
        case ErrorCode::ReducibleParameter: return "ReducibleParameter";
        case ErrorCode::PlaceMismatch: return "PlaceMismatch";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::NotSplit: return "NotSplit";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::InvalidAction: return "InvalidAction";
        case ErrorCode::NoSubgroup: return "NoSubgroup";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::ClassGroupMismatch: return "ClassGroupMismatch";
        case ErrorCode::FixtureTooSmall: return "FixtureTooSmall";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Scalars

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

Fraction mod_one(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw Error(ErrorCode::ParseError, "fraction with non-positive denominator");
    num = mod_floor(num, den);
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {n, 1};
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        std::int64_t n = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        std::int64_t d = std::stoll(b, &used);
        if (used != b.size() || d <= 0) throw std::invalid_argument(text);
        std::int64_t g = std::gcd(n, d);
        return {n / g, d / g};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    }
}

namespace {

BigInt big_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Extended gcd: returns g >= 0 with x*a + y*b = g.
BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
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

BigMatrix identity_matrix(std::size_t n) {
    BigMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct SnfWork {
    BigMatrix D;
    BigMatrix U;     // tracked only when track_u
    BigMatrix V;
    BigMatrix Vinv;  // inverse of V, maintained alongside it
    std::size_t rank = 0;
};

SnfWork snf_impl(const BigMatrix& m, std::size_t cols, bool track_u) {
    SnfWork w;
    w.D = m;
    const std::size_t rows = m.size();
    if (track_u) w.U = identity_matrix(rows);
    w.V = identity_matrix(cols);
    w.Vinv = identity_matrix(cols);
    auto& D = w.D;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(D[a], D[b]);
        if (track_u) std::swap(w.U[a], w.U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : D) std::swap(row[a], row[b]);
        for (auto& row : w.V) std::swap(row[a], row[b]);
        std::swap(w.Vinv[a], w.Vinv[b]);
    };
    // row_i -= q * row_t
    auto row_op = [&](std::size_t i, std::size_t t, const BigInt& q) {
        for (std::size_t j = 0; j < cols; ++j)
            if (D[t][j] != 0) D[i][j] -= q * D[t][j];
        if (track_u)
            for (std::size_t j = 0; j < rows; ++j)
                if (w.U[t][j] != 0) w.U[i][j] -= q * w.U[t][j];
    };
    // col_j -= q * col_t
    auto col_op = [&](std::size_t j, std::size_t t, const BigInt& q) {
        for (std::size_t i = 0; i < rows; ++i)
            if (D[i][t] != 0) D[i][j] -= q * D[i][t];
        for (std::size_t i = 0; i < cols; ++i)
            if (w.V[i][t] != 0) w.V[i][j] -= q * w.V[i][t];
        for (std::size_t i = 0; i < cols; ++i)
            if (w.Vinv[j][i] != 0) w.Vinv[t][i] += q * w.Vinv[j][i];
    };

    const std::size_t n = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < n; ++t) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (!found || abs(D[i][j]) < best)) {
                    best = abs(D[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D[i][t] == 0) continue;
                BigInt q = D[i][t] / D[t][t];
                row_op(i, t, q);
                if (D[i][t] != 0) {
                    dirty = true;
                    if (abs(D[i][t]) < abs(D[t][t])) swap_rows(t, i);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D[t][j] == 0) continue;
                BigInt q = D[t][j] / D[t][t];
                col_op(j, t, q);
                if (D[t][j] != 0) {
                    dirty = true;
                    if (abs(D[t][j]) < abs(D[t][t])) swap_cols(t, j);
                }
            }
            if (dirty) continue;
            // Divisibility: fold any offending row into the pivot row.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_op(t, bad, BigInt(-1));
        }
        if (D[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) D[t][j] = -D[t][j];
            if (track_u)
                for (std::size_t j = 0; j < rows; ++j) w.U[t][j] = -w.U[t][j];
        }
    }
    w.rank = t;
    return w;
}

struct FullPresentation {
    Presentation pres;
    std::vector<std::size_t> kept;  // SNF coordinates that survive (d_i > 1)
    BigMatrix Vinv;
};

FullPresentation present_full(const IntMatrix& relations, std::size_t k) {
    FullPresentation out;
    if (k == 0) {
        out.pres.group = FinAbGroup();
        return out;
    }
    BigMatrix rel;
    rel.reserve(relations.size());
    for (const auto& row : relations) {
        if (row.size() != k) throw Error(ErrorCode::InvalidGroup, "relation row has wrong length");
        if (std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; })) continue;
        std::vector<BigInt> r(row.begin(), row.end());
        rel.push_back(std::move(r));
    }
    SnfWork w = snf_impl(rel, k, false);
    std::vector<std::int64_t> invariants;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt d = i < w.rank ? w.D[i][i] : BigInt(0);
        if (d == 0) throw Error(ErrorCode::InfiniteQuotient, "relations leave a free generator");
        if (d == 1) continue;
        if (d > BigInt(std::numeric_limits<std::int64_t>::max()))
            throw Error(ErrorCode::GroupTooLarge, "invariant factor exceeds 64 bits");
        out.kept.push_back(i);
        invariants.push_back(static_cast<std::int64_t>(d));
    }
    out.pres.group = FinAbGroup(invariants);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::int64_t> c;
        for (std::size_t idx = 0; idx < out.kept.size(); ++idx) {
            BigInt v = big_mod(w.V[j][out.kept[idx]], BigInt(invariants[idx]));
            c.push_back(static_cast<std::int64_t>(v));
        }
        out.pres.generator_images.push_back(out.pres.group.element(c));
    }
    out.Vinv = std::move(w.Vinv);
    return out;
}

// Basis of the integer kernel of a (rows x cols) as column vectors.
std::vector<std::vector<BigInt>> integer_kernel(const BigMatrix& a, std::size_t cols) {
    SnfWork w = snf_impl(a, cols, false);
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t j = w.rank; j < cols; ++j) {
        std::vector<BigInt> v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = w.V[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    SnfWork w = snf_impl(m, cols, true);
    return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    BigMatrix out(a.size(), std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

BigInt determinant(const BigMatrix& m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigMatrix a = m;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::vector<std::int64_t> invariants) : invariants_(std::move(invariants)) {
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] < 2)
            throw Error(ErrorCode::InvalidGroup, "invariant factors must be >= 2");
        if (i + 1 < invariants_.size() && invariants_[i + 1] % invariants_[i] != 0)
            throw Error(ErrorCode::InvalidGroup, "invariant factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::cyclic(std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidGroup, "cyclic order must be >= 1");
    return n == 1 ? FinAbGroup() : FinAbGroup({n});
}

std::int64_t FinAbGroup::order() const {
    std::int64_t n = 1;
    for (auto d : invariants_) {
        if (n > std::numeric_limits<std::int64_t>::max() / d)
            throw Error(ErrorCode::GroupTooLarge, "group order exceeds 64 bits");
        n *= d;
    }
    return n;
}

std::int64_t FinAbGroup::exponent() const { return invariants_.empty() ? 1 : invariants_.back(); }

GroupElem FinAbGroup::zero() const { return {std::vector<std::int64_t>(rank(), 0)}; }

GroupElem FinAbGroup::generator(std::size_t i) const {
    GroupElem g = zero();
    g.coords.at(i) = 1;
    return g;
}

GroupElem FinAbGroup::element(std::vector<std::int64_t> coords) const {
    if (coords.size() != rank())
        throw Error(ErrorCode::GroupMismatch, "coordinate count does not match group rank");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], invariants_[i]);
    return {std::move(coords)};
}

bool FinAbGroup::contains(const GroupElem& x) const {
    if (x.coords.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= invariants_[i]) return false;
    return true;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
    GroupElem r = a;
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % invariants_[i];
    return r;
}

GroupElem FinAbGroup::sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }

GroupElem FinAbGroup::neg(const GroupElem& a) const {
    GroupElem r = a;
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = mod_floor(-a.coords[i], invariants_[i]);
    return r;
}

GroupElem FinAbGroup::scale(const GroupElem& a, std::int64_t k) const {
    GroupElem r = a;
    for (std::size_t i = 0; i < rank(); ++i) {
        __int128 v = static_cast<__int128>(a.coords[i]) * k % invariants_[i];
        r.coords[i] = mod_floor(static_cast<std::int64_t>(v), invariants_[i]);
    }
    return r;
}

std::int64_t FinAbGroup::elem_order(const GroupElem& a) const {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        std::int64_t d = invariants_[i];
        n = lcm64(n, d / std::gcd(a.coords[i], d));
    }
    return n;
}

void FinAbGroup::for_each_element(const std::function<void(const GroupElem&)>& fn) const {
    GroupElem x = zero();
    const std::size_t k = rank();
    for (;;) {
        fn(x);
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++x.coords[i] < invariants_[i]) break;
            x.coords[i] = 0;
        }
        if (i == k) return;
    }
}

std::vector<GroupElem> FinAbGroup::elements() const {
    std::vector<GroupElem> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const GroupElem& x) { out.push_back(x); });
    return out;
}

std::int64_t FinAbGroup::index_of(const GroupElem& x) const {
    std::int64_t idx = 0;
    for (std::size_t i = rank(); i > 0; --i) idx = idx * invariants_[i - 1] + x.coords[i - 1];
    return idx;
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) {
    os << '[';
    for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << g.invariants()[i];
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const GroupElem& x) {
    os << '(';
    for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
    return os << ')';
}

std::int64_t elem_order(const FinAbGroup& g, const GroupElem& x) { return g.elem_order(x); }

// ---------------------------------------------------------------------------
// GroupHom

bool GroupHom::well_defined(const FinAbGroup& domain, const FinAbGroup& codomain, const IntMatrix& matrix) {
    if (matrix.size() != codomain.rank()) return false;
    for (const auto& row : matrix)
        if (row.size() != domain.rank()) return false;
    for (std::size_t j = 0; j < domain.rank(); ++j)
        for (std::size_t i = 0; i < codomain.rank(); ++i) {
            __int128 v = static_cast<__int128>(matrix[i][j]) * domain.invariants()[j];
            if (v % codomain.invariants()[i] != 0) return false;
        }
    return true;
}

GroupHom::GroupHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (!well_defined(domain_, codomain_, matrix_))
        throw Error(ErrorCode::IllFormedHom, "matrix does not define a homomorphism");
    for (std::size_t i = 0; i < codomain_.rank(); ++i)
        for (auto& v : matrix_[i]) v = mod_floor(v, codomain_.invariants()[i]);
}

GroupHom GroupHom::from_images(const FinAbGroup& domain, const FinAbGroup& codomain,
                               const std::vector<GroupElem>& images) {
    if (images.size() != domain.rank())
        throw Error(ErrorCode::GroupMismatch, "one image per domain generator required");
    IntMatrix m(codomain.rank(), std::vector<std::int64_t>(domain.rank(), 0));
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].coords.size() != codomain.rank())
            throw Error(ErrorCode::GroupMismatch, "image has wrong rank");
        for (std::size_t i = 0; i < codomain.rank(); ++i) m[i][j] = images[j].coords[i];
    }
    return GroupHom(domain, codomain, std::move(m));
}

GroupHom GroupHom::identity(const FinAbGroup& g) { return scalar(g, 1); }

GroupHom GroupHom::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
    return GroupHom(domain, codomain,
                    IntMatrix(codomain.rank(), std::vector<std::int64_t>(domain.rank(), 0)));
}

GroupHom GroupHom::scalar(const FinAbGroup& g, std::int64_t k) {
    IntMatrix m(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = k;
    return GroupHom(g, g, std::move(m));
}

GroupElem GroupHom::operator()(const GroupElem& x) const {
    if (!domain_.contains(x)) throw Error(ErrorCode::GroupMismatch, "element not in hom domain");
    std::vector<std::int64_t> y(codomain_.rank(), 0);
    for (std::size_t i = 0; i < codomain_.rank(); ++i) {
        const std::int64_t d = codomain_.invariants()[i];
        __int128 acc = 0;
        for (std::size_t j = 0; j < domain_.rank(); ++j) acc = (acc + static_cast<__int128>(matrix_[i][j]) * x.coords[j]) % d;
        y[i] = static_cast<std::int64_t>(acc);
    }
    return codomain_.element(std::move(y));
}

GroupElem GroupHom::image_of_generator(std::size_t j) const { return (*this)(domain_.generator(j)); }

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (!(inner.codomain() == domain_)) throw Error(ErrorCode::GroupMismatch, "cannot compose homs");
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < inner.domain().rank(); ++j) images.push_back((*this)(inner.image_of_generator(j)));
    return from_images(inner.domain(), codomain_, images);
}

GroupHom GroupHom::plus(const GroupHom& other) const {
    if (!(other.domain_ == domain_ && other.codomain_ == codomain_))
        throw Error(ErrorCode::GroupMismatch, "cannot add homs with different signatures");
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < domain_.rank(); ++j)
        images.push_back(codomain_.add(image_of_generator(j), other.image_of_generator(j)));
    return from_images(domain_, codomain_, images);
}

GroupHom GroupHom::minus(const GroupHom& other) const {
    if (!(other.domain_ == domain_ && other.codomain_ == codomain_))
        throw Error(ErrorCode::GroupMismatch, "cannot subtract homs with different signatures");
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < domain_.rank(); ++j)
        images.push_back(codomain_.sub(image_of_generator(j), other.image_of_generator(j)));
    return from_images(domain_, codomain_, images);
}

bool GroupHom::is_injective() const { return hom_kernel_image(*this).kernel.group.is_trivial(); }

bool GroupHom::is_surjective() const { return hom_kernel_image(*this).image.group == codomain_; }

bool GroupHom::operator==(const GroupHom& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && matrix_ == other.matrix_;
}

// ---------------------------------------------------------------------------
// Character

Character::Character(FinAbGroup group, std::vector<std::int64_t> numerators)
    : group_(std::move(group)), numerators_(std::move(numerators)) {
    if (numerators_.size() != group_.rank())
        throw Error(ErrorCode::GroupMismatch, "character component count does not match rank");
    for (std::size_t i = 0; i < numerators_.size(); ++i)
        numerators_[i] = mod_floor(numerators_[i], group_.invariants()[i]);
}

Character Character::trivial(const FinAbGroup& g) { return Character(g, std::vector<std::int64_t>(g.rank(), 0)); }

Character Character::from_fractions(const FinAbGroup& g, const std::vector<Fraction>& components) {
    if (components.size() != g.rank())
        throw Error(ErrorCode::GroupMismatch, "character component count does not match rank");
    std::vector<std::int64_t> nums;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const std::int64_t d = g.invariants()[i];
        const auto& f = components[i];
        if (d % f.den != 0)
            throw Error(ErrorCode::GroupMismatch,
                        "component " + f.str() + " has denominator not dividing " + std::to_string(d));
        nums.push_back(f.num * (d / f.den));
    }
    return Character(g, std::move(nums));
}

Fraction Character::component(std::size_t i) const { return mod_one(numerators_.at(i), group_.invariants()[i]); }

std::vector<Fraction> Character::components() const {
    std::vector<Fraction> out;
    for (std::size_t i = 0; i < numerators_.size(); ++i) out.push_back(component(i));
    return out;
}

Fraction Character::operator()(const GroupElem& x) const {
    if (!group_.contains(x)) throw Error(ErrorCode::GroupMismatch, "element not in character's group");
    const std::int64_t e = group_.exponent();
    __int128 acc = 0;
    for (std::size_t i = 0; i < numerators_.size(); ++i)
        acc = (acc + static_cast<__int128>(numerators_[i]) * x.coords[i] % e * (e / group_.invariants()[i])) % e;
    return mod_one(static_cast<std::int64_t>(acc), e);
}

Character Character::operator*(const Character& other) const {
    if (!(group_ == other.group_)) throw Error(ErrorCode::GroupMismatch, "characters on different groups");
    std::vector<std::int64_t> n(numerators_.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = numerators_[i] + other.numerators_[i];
    return Character(group_, std::move(n));
}

Character Character::operator/(const Character& other) const { return *this * other.inverse(); }

Character Character::inverse() const { return pow(-1); }

Character Character::pow(std::int64_t k) const {
    std::vector<std::int64_t> n(numerators_.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        __int128 v = static_cast<__int128>(numerators_[i]) * k % group_.invariants()[i];
        n[i] = static_cast<std::int64_t>(v);
    }
    return Character(group_, std::move(n));
}

std::int64_t Character::order() const {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < numerators_.size(); ++i) {
        const std::int64_t d = group_.invariants()[i];
        n = lcm64(n, d / std::gcd(numerators_[i], d));
    }
    return n;
}

bool Character::is_trivial() const {
    return std::all_of(numerators_.begin(), numerators_.end(), [](std::int64_t v) { return v == 0; });
}

std::ostream& operator<<(std::ostream& os, const Character& chi) {
    os << '<';
    for (std::size_t i = 0; i < chi.numerators().size(); ++i) os << (i ? "," : "") << chi.component(i).str();
    return os << '>';
}

std::int64_t character_order(const Character& chi) { return chi.order(); }

// ---------------------------------------------------------------------------
// Constructions

Presentation present(const IntMatrix& relations, std::size_t num_generators) {
    return present_full(relations, num_generators).pres;
}

FinAbGroup from_relations(const IntMatrix& relations, std::size_t num_generators) {
    return present(relations, num_generators).group;
}

FinAbGroup group_from_cayley(const std::vector<std::vector<std::size_t>>& table, std::size_t identity,
                             std::vector<GroupElem>& elem_of) {
    const std::size_t h = table.size();
    IntMatrix rel;
    std::vector<std::int64_t> id_row(h, 0);
    id_row[identity] = 1;
    rel.push_back(id_row);
    for (std::size_t i = 0; i < h; ++i) {
        if (i == identity) continue;
        for (std::size_t j = i; j < h; ++j) {
            if (j == identity) continue;
            std::vector<std::int64_t> row(h, 0);
            row[i] += 1;
            row[j] += 1;
            row[table[i][j]] -= 1;
            rel.push_back(std::move(row));
        }
    }
    Presentation p = present(rel, h);
    elem_of = p.generator_images;
    return p.group;
}

Subgroup subgroup_generated(const FinAbGroup& ambient, const std::vector<GroupElem>& gens) {
    const std::size_t s = gens.size();
    const std::size_t n = ambient.rank();
    for (const auto& g : gens)
        if (!ambient.contains(g)) throw Error(ErrorCode::GroupMismatch, "generator not in ambient group");
    if (s == 0) return {FinAbGroup(), GroupHom::zero(FinAbGroup(), ambient)};

    // Relations among the generators: kernel of [G | diag(a)], first s coordinates.
    BigMatrix a(n, std::vector<BigInt>(s + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < s; ++t) a[i][t] = gens[t].coords[i];
        a[i][s + i] = ambient.invariants()[i];
    }
    IntMatrix relations;
    if (n == 0) {
        for (std::size_t t = 0; t < s; ++t) {
            std::vector<std::int64_t> row(s, 0);
            row[t] = 1;
            relations.push_back(row);
        }
    } else {
        for (const auto& v : integer_kernel(a, s + n)) {
            std::vector<std::int64_t> row(s);
            for (std::size_t t = 0; t < s; ++t) {
                // Entries are bounded by the group exponent after reduction.
                BigInt r = big_mod(v[t], BigInt(ambient.order()));
                row[t] = static_cast<std::int64_t>(r);
            }
            relations.push_back(row);
        }
        // Each generator has finite order, which the kernel already encodes; add it
        // explicitly so reduction mod |A| above cannot lose a relation.
        for (std::size_t t = 0; t < s; ++t) {
            std::vector<std::int64_t> row(s, 0);
            row[t] = ambient.elem_order(gens[t]);
            relations.push_back(row);
        }
    }
    FullPresentation fp = present_full(relations, s);
    std::vector<GroupElem> images;
    for (std::size_t idx = 0; idx < fp.kept.size(); ++idx) {
        const std::size_t i = fp.kept[idx];
        GroupElem acc = ambient.zero();
        for (std::size_t t = 0; t < s; ++t) {
            BigInt c = big_mod(fp.Vinv[i][t], BigInt(ambient.exponent()));
            acc = ambient.add(acc, ambient.scale(gens[t], static_cast<std::int64_t>(c)));
        }
        images.push_back(acc);
    }
    return {fp.pres.group, GroupHom::from_images(fp.pres.group, ambient, images)};
}

Quotient quotient_by(const FinAbGroup& ambient, const std::vector<GroupElem>& gens) {
    const std::size_t n = ambient.rank();
    IntMatrix relations;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> row(n, 0);
        row[i] = ambient.invariants()[i];
        relations.push_back(row);
    }
    for (const auto& g : gens) {
        if (!ambient.contains(g)) throw Error(ErrorCode::GroupMismatch, "generator not in ambient group");
        relations.push_back(g.coords);
    }
    Presentation p = present(relations, n);
    return {p.group, GroupHom::from_images(ambient, p.group, p.generator_images)};
}

KernelImage hom_kernel_image(const GroupHom& f) {
    const FinAbGroup& A = f.domain();
    const FinAbGroup& B = f.codomain();
    std::vector<GroupElem> columns;
    for (std::size_t j = 0; j < A.rank(); ++j) columns.push_back(f.image_of_generator(j));
    Subgroup image = subgroup_generated(B, columns);

    const std::size_t n = A.rank(), m = B.rank();
    std::vector<GroupElem> kernel_gens;
    if (n > 0) {
        if (m == 0) {
            for (std::size_t j = 0; j < n; ++j) kernel_gens.push_back(A.generator(j));
        } else {
            BigMatrix a(m, std::vector<BigInt>(n + m, 0));
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < n; ++j) a[i][j] = f.matrix()[i][j];
                a[i][n + i] = B.invariants()[i];
            }
            for (const auto& v : integer_kernel(a, n + m)) {
                std::vector<std::int64_t> c(n);
                for (std::size_t j = 0; j < n; ++j)
                    c[j] = static_cast<std::int64_t>(big_mod(v[j], BigInt(A.invariants()[j])));
                kernel_gens.push_back(A.element(c));
            }
        }
    }
    return {subgroup_generated(A, kernel_gens), std::move(image)};
}

Character pullback_character(const Character& chi, const GroupHom& f) {
    if (!(chi.group() == f.codomain()))
        throw Error(ErrorCode::GroupMismatch, "character does not live on the hom's codomain");
    const FinAbGroup& A = f.domain();
    std::vector<std::int64_t> nums;
    for (std::size_t j = 0; j < A.rank(); ++j) {
        Fraction v = chi(f.image_of_generator(j));
        nums.push_back(v.num * (A.invariants()[j] / v.den));
    }
    return Character(A, std::move(nums));
}

std::optional<Character> character_nth_root(const Character& chi, std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidOrder, "root index must be >= 1");
    const FinAbGroup& g = chi.group();
    std::vector<std::int64_t> root;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const std::int64_t d = g.invariants()[i];
        const std::int64_t c = chi.numerators()[i];
        const std::int64_t gcd = std::gcd(n, d);
        if (c % gcd != 0) return std::nullopt;
        const std::int64_t m = d / gcd;
        BigInt x, y;
        xgcd(BigInt(n / gcd), BigInt(m), x, y);
        BigInt e = big_mod(BigInt(c / gcd) * x, BigInt(m));
        root.push_back(static_cast<std::int64_t>(e));
    }
    return Character(g, std::move(root));
}

std::optional<std::vector<BigInt>> solve_congruences(const BigMatrix& a, const std::vector<BigInt>& t,
                                                     const BigInt& modulus) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    if (cols == 0) {
        for (const auto& v : t)
            if (big_mod(v, modulus) != 0) return std::nullopt;
        return std::vector<BigInt>{};
    }
    SnfWork w = snf_impl(a, cols, true);
    std::vector<BigInt> s(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) s[i] += w.U[i][j] * t[j];
    std::vector<BigInt> y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        const BigInt si = big_mod(s[i], modulus);
        const BigInt d = (i < cols) ? w.D[i][i] : BigInt(0);
        if (d == 0) {
            if (si != 0) return std::nullopt;
            continue;
        }
        BigInt g = boost::multiprecision::gcd(d, modulus);
        if (si % g != 0) return std::nullopt;
        BigInt m = modulus / g;
        BigInt x, unused;
        xgcd(big_mod(d / g, m), m, x, unused);
        y[i] = big_mod((si / g) * x, m);
    }
    std::vector<BigInt> c(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) c[i] += w.V[i][j] * y[j];
    return c;
}

std::optional<Character> solve_pullback(const GroupHom& f, const Character& target) {
    if (!(target.group() == f.domain())) throw Error(ErrorCode::GroupMismatch, "target not on hom domain");
    const FinAbGroup& A = f.domain();
    const FinAbGroup& B = f.codomain();
    if (B.rank() == 0) {
        if (target.is_trivial()) return Character::trivial(B);
        return std::nullopt;
    }
    std::int64_t L = B.exponent();
    for (auto d : A.invariants()) L = lcm64(L, d);
    BigMatrix mat(A.rank(), std::vector<BigInt>(B.rank(), 0));
    std::vector<BigInt> rhs(A.rank(), 0);
    for (std::size_t j = 0; j < A.rank(); ++j) {
        for (std::size_t i = 0; i < B.rank(); ++i)
            mat[j][i] = BigInt(f.matrix()[i][j]) * (L / B.invariants()[i]);
        rhs[j] = BigInt(target.numerators()[j]) * (L / A.invariants()[j]);
    }
    if (A.rank() == 0) return Character::trivial(B);
    auto sol = solve_congruences(mat, rhs, BigInt(L));
    if (!sol) return std::nullopt;
    std::vector<std::int64_t> nums;
    for (std::size_t i = 0; i < B.rank(); ++i)
        nums.push_back(static_cast<std::int64_t>(big_mod((*sol)[i], BigInt(B.invariants()[i]))));
    Character chi(B, std::move(nums));
    if (!(pullback_character(chi, f) == target))
        throw Error(ErrorCode::NoSolution, "congruence solver produced an invalid character");
    return chi;
}

std::vector<Character> annihilator_of_image(const GroupHom& f) {
    const FinAbGroup& B = f.codomain();
    std::vector<GroupElem> images;
    for (std::size_t j = 0; j < f.domain().rank(); ++j) images.push_back(f.image_of_generator(j));
    Quotient q = quotient_by(B, images);
    std::vector<Character> out;
    for_each_character(q.group, [&](const Character& psi) { out.push_back(pullback_character(psi, q.projection)); });
    return out;
}

std::vector<Character> all_pullback_solutions(const GroupHom& f, const Character& target) {
    auto base = solve_pullback(f, target);
    if (!base) return {};
    std::vector<Character> out;
    for (const auto& a : annihilator_of_image(f)) out.push_back(*base * a);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t max_group_order() {
    if (const char* env = std::getenv("PERIODLAB_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

void for_each_character(const FinAbGroup& g, const std::function<void(const Character&)>& fn,
                        std::int64_t bound) {
    if (g.order() > bound)
        throw Error(ErrorCode::GroupTooLarge,
                    "group of order " + std::to_string(g.order()) + " exceeds enumeration bound");
    g.for_each_element([&](const GroupElem& x) { fn(Character(g, x.coords)); });
}

std::vector<Character> enumerate_characters(const FinAbGroup& g, std::int64_t bound) {
    std::vector<Character> out;
    for_each_character(g, [&](const Character& c) { out.push_back(c); }, bound);
    return out;
}

}  // namespace periodlab
