#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "periodlab/abgroup.hpp"

namespace periodlab {

struct QuadForm {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    QuadForm opposite() const { return {a, -b, c}; }

    auto operator<=>(const QuadForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadForm& f);

/// transform = {p, q, r, s}: reduced(x, y) = original(p x + q y, r x + s y).
struct Reduction {
    QuadForm form;
    std::array<std::int64_t, 4> transform{1, 0, 0, 1};
};

QuadForm apply_transform(const QuadForm& f, const std::array<std::int64_t, 4>& m);

/// Gauss reduction of a positive definite form.
Reduction reduce_form(const QuadForm& f);
bool is_reduced_definite(const QuadForm& f);

/// Reduced indefinite form: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced_indefinite(const QuadForm& f);
QuadForm rho(const QuadForm& f);
QuadForm reduce_indefinite(const QuadForm& f);

/// Dirichlet composition; the result is reduced for D < 0 and rho-reduced for D > 0.
QuadForm compose_classes(const QuadForm& f, const QuadForm& g);

QuadForm principal_form(std::int64_t D);

bool is_fundamental_discriminant(std::int64_t D);
/// Distinct primes dividing |D|.
std::vector<std::int64_t> prime_factors(std::int64_t n);

std::vector<QuadForm> reduced_forms(std::int64_t D);

struct FormClassGroup {
    std::int64_t discriminant = 0;
    bool narrow = false;
    std::vector<QuadForm> representatives;
    FinAbGroup group;
    std::vector<GroupElem> elem_of;  // representative index -> group element

    std::size_t h() const { return representatives.size(); }
    /// Index of the representative equivalent to f.
    std::size_t class_index(const QuadForm& f) const;
    GroupElem element_of(const QuadForm& f) const;

    // For D > 0: every rho-reduced form, mapped to the index of its cycle.
    std::map<QuadForm, std::size_t> cycle_of;
    // For D > 0 ordinary groups: the narrow group and the projection onto this one.
    std::vector<std::size_t> narrow_to_ordinary;
};

/// Imaginary class group of a negative fundamental discriminant.
FormClassGroup class_group(std::int64_t D);

/// Narrow (narrow = true) or ordinary class group of a positive fundamental discriminant.
FormClassGroup real_class_group(std::int64_t D, bool narrow);

struct FundamentalUnit {
    BigInt x;
    BigInt y;
    int norm = 1;
    std::size_t period = 0;
};

/// Smallest unit (x + y sqrt D)/2 > 1 with x^2 - D y^2 = 4 norm.
FundamentalUnit fundamental_unit(std::int64_t D);

std::size_t two_rank(const FinAbGroup& g);

}  // namespace periodlab
