#pragma once

// Finite abelian groups in invariant-factor form, homomorphisms between them
// and their character groups. Characters are stored exactly as elements of
// Q/Z per generator, never as floating-point roots of unity.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "periodlab/error.hpp"

namespace periodlab {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Reduced fraction num/den with den > 0. Used for values in Q/Z, in which
/// case 0 <= num < den.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    auto operator<=>(const Fraction&) const = default;
    std::string str() const;
    static Fraction parse(const std::string& text);
};

/// num/den reduced into [0, 1).
Fraction mod_one(std::int64_t num, std::int64_t den);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithForm {
    BigMatrix U;  // rows x rows, unimodular
    BigMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
    BigMatrix V;  // cols x cols, unimodular
};

/// U * M * V = D. Total function; the zero matrix yields U = V = identity.
SmithForm smith_normal_form(const BigMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

BigMatrix to_big(const IntMatrix& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigInt determinant(const BigMatrix& m);

// ---------------------------------------------------------------------------
// Groups and elements

struct GroupElem {
    std::vector<std::int64_t> coords;

    auto operator<=>(const GroupElem&) const = default;
};

/// Z/d_1 x ... x Z/d_k with d_i | d_{i+1} and d_i >= 2. The trivial group has
/// no invariants.
class FinAbGroup {
  public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<std::int64_t> invariants);

    static FinAbGroup cyclic(std::int64_t n);

    const std::vector<std::int64_t>& invariants() const { return invariants_; }
    std::size_t rank() const { return invariants_.size(); }
    std::int64_t order() const;
    std::int64_t exponent() const;
    bool is_trivial() const { return invariants_.empty(); }

    GroupElem zero() const;
    GroupElem generator(std::size_t i) const;
    /// Reduces each coordinate into [0, d_i).
    GroupElem element(std::vector<std::int64_t> coords) const;
    bool contains(const GroupElem& x) const;

    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem sub(const GroupElem& a, const GroupElem& b) const;
    GroupElem neg(const GroupElem& a) const;
    GroupElem scale(const GroupElem& a, std::int64_t k) const;
    std::int64_t elem_order(const GroupElem& a) const;

    /// Visits every element in mixed-radix order starting from zero, first coordinate fastest.
    void for_each_element(const std::function<void(const GroupElem&)>& fn) const;
    std::vector<GroupElem> elements() const;
    /// Index of an element in the for_each_element order.
    std::int64_t index_of(const GroupElem& x) const;

    auto operator<=>(const FinAbGroup&) const = default;

  private:
    std::vector<std::int64_t> invariants_;
};

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);
std::ostream& operator<<(std::ostream& os, const GroupElem& x);

// ---------------------------------------------------------------------------
// Homomorphisms

/// Column j of the matrix is the image of generator j of the domain.
class GroupHom {
  public:
    /// The map between trivial groups.
    GroupHom() = default;
    GroupHom(FinAbGroup domain, FinAbGroup codomain, IntMatrix matrix);

    static GroupHom from_images(const FinAbGroup& domain, const FinAbGroup& codomain,
                                const std::vector<GroupElem>& images);
    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero(const FinAbGroup& domain, const FinAbGroup& codomain);
    static GroupHom scalar(const FinAbGroup& g, std::int64_t k);

    const FinAbGroup& domain() const { return domain_; }
    const FinAbGroup& codomain() const { return codomain_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElem operator()(const GroupElem& x) const;
    GroupElem image_of_generator(std::size_t j) const;

    /// (*this) o inner
    GroupHom compose(const GroupHom& inner) const;
    GroupHom plus(const GroupHom& other) const;
    GroupHom minus(const GroupHom& other) const;

    bool is_injective() const;
    bool is_surjective() const;

    /// Pointwise equality on generators.
    bool operator==(const GroupHom& other) const;

    /// Whether d_j * column j vanishes in the codomain for every j.
    static bool well_defined(const FinAbGroup& domain, const FinAbGroup& codomain,
                             const IntMatrix& matrix);

  private:
    FinAbGroup domain_;
    FinAbGroup codomain_;
    IntMatrix matrix_;
};

// ---------------------------------------------------------------------------
// Characters

class Character {
  public:
    Character() = default;
    /// numerators[i] / d_i is the value on generator i (mod 1).
    Character(FinAbGroup group, std::vector<std::int64_t> numerators);

    static Character trivial(const FinAbGroup& g);
    static Character from_fractions(const FinAbGroup& g, const std::vector<Fraction>& components);

    const FinAbGroup& group() const { return group_; }
    const std::vector<std::int64_t>& numerators() const { return numerators_; }
    Fraction component(std::size_t i) const;
    std::vector<Fraction> components() const;

    /// Value at x as an element of Q/Z.
    Fraction operator()(const GroupElem& x) const;

    Character operator*(const Character& other) const;
    Character operator/(const Character& other) const;
    Character inverse() const;
    Character pow(std::int64_t k) const;

    std::int64_t order() const;
    bool is_trivial() const;

    auto operator<=>(const Character&) const = default;

  private:
    FinAbGroup group_;
    std::vector<std::int64_t> numerators_;
};

std::ostream& operator<<(std::ostream& os, const Character& chi);

std::int64_t character_order(const Character& chi);
std::int64_t elem_order(const FinAbGroup& g, const GroupElem& x);

// ---------------------------------------------------------------------------
// Constructions

/// A group together with where each original generator lands in it.
struct Presentation {
    FinAbGroup group;
    std::vector<GroupElem> generator_images;
};

/// Cokernel of the relation rows on num_generators free generators.
/// Throws InfiniteQuotient when the cokernel has a free part.
Presentation present(const IntMatrix& relations, std::size_t num_generators);
FinAbGroup from_relations(const IntMatrix& relations, std::size_t num_generators);

/// Structure of a finite abelian group given by its full Cayley table
/// (table[i][j] = index of i*j). elem_of receives the element for each index.
FinAbGroup group_from_cayley(const std::vector<std::vector<std::size_t>>& table, std::size_t identity,
                             std::vector<GroupElem>& elem_of);

struct Subgroup {
    FinAbGroup group;
    GroupHom embedding;
};

Subgroup subgroup_generated(const FinAbGroup& ambient, const std::vector<GroupElem>& gens);

struct Quotient {
    FinAbGroup group;
    GroupHom projection;
};

Quotient quotient_by(const FinAbGroup& ambient, const std::vector<GroupElem>& gens);

struct KernelImage {
    Subgroup kernel;
    Subgroup image;
};

KernelImage hom_kernel_image(const GroupHom& f);

/// chi o f. Throws GroupMismatch if chi does not live on f's codomain.
Character pullback_character(const Character& chi, const GroupHom& f);

/// Some eta with eta^n = chi, or nullopt when chi is nontrivial on G[n].
std::optional<Character> character_nth_root(const Character& chi, std::int64_t n);

/// Some chi on f's codomain with chi o f = target, or nullopt.
std::optional<Character> solve_pullback(const GroupHom& f, const Character& target);

/// All characters of f's codomain that are trivial on f's image.
std::vector<Character> annihilator_of_image(const GroupHom& f);

/// Every solution of chi o f = target (a coset of annihilator_of_image).
std::vector<Character> all_pullback_solutions(const GroupHom& f, const Character& target);

/// Upper bound on brute-force enumeration; PERIODLAB_MAX_GROUP_ORDER or 10^6.
std::int64_t max_group_order();

/// Visits all |G| characters, trivial first. Throws GroupTooLarge above bound.
void for_each_character(const FinAbGroup& g, const std::function<void(const Character&)>& fn,
                        std::int64_t bound = max_group_order());
std::vector<Character> enumerate_characters(const FinAbGroup& g,
                                            std::int64_t bound = max_group_order());

/// Solves A c = t (mod modulus) over the integers; returns one solution.
std::optional<std::vector<BigInt>> solve_congruences(const BigMatrix& a, const std::vector<BigInt>& t,
                                                     const BigInt& modulus);

}  // namespace periodlab
