#pragma once

// Class functions on small finite groups with exact cyclotomic values. This is
// the independent check on the symbolic calculus: everything here is computed
// from the multiplication table.

#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "periodlab/abgroup.hpp"

namespace periodlab {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(zeta_N), stored reduced modulo the N-th cyclotomic polynomial as
/// integer numerators over one common denominator. Overflow throws.
class Cyclo {
  public:
    Cyclo() = default;
    explicit Cyclo(int conductor);
    static Cyclo rational(int conductor, const Rational& q);
    /// zeta_N^k
    static Cyclo root(int conductor, std::int64_t k);
    /// exp(2 pi i * f) for f in Q/Z; f.den must divide the conductor.
    static Cyclo from_fraction(int conductor, const Fraction& f);

    int conductor() const { return n_; }
    const std::vector<std::int64_t>& numerators() const { return c_; }
    std::int64_t denominator() const { return den_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rational& q) const;
    Cyclo conj() const;
    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws unless is_rational()

    bool operator==(const Cyclo& o) const { return n_ == o.n_ && den_ == o.den_ && c_ == o.c_; }

  private:
    void normalize();
    int n_ = 1;
    std::vector<std::int64_t> c_;  // length phi(N)
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& z);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
  public:
    /// Verifies the group axioms; throws NotAGroup.
    FiniteGroup(std::vector<std::vector<int>> table, int conductor = 0);

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return id_; }
    int pow(int a, std::int64_t k) const;
    int conj(int g, int by) const { return mul(mul(by, g), inv(by)); }  // by g by^-1
    int elem_order(int a) const { return ord_[a]; }
    int exponent() const { return exp_; }
    /// Roots of unity used for values; the exponent of the ambient group.
    int conductor() const { return conductor_; }

    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }
    int num_classes() const { return static_cast<int>(classes_.size()); }

    bool is_abelian() const;
    std::vector<int> closure(const std::vector<int>& gens) const;
    std::vector<int> derived_subgroup() const;

  private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_, ord_, class_of_;
    std::vector<std::vector<int>> classes_;
    int id_ = 0, exp_ = 1, conductor_ = 1;
};

/// A subgroup re-indexed as a group of its own.
struct SubgroupData {
    GroupPtr parent;
    GroupPtr group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // -1 outside the subgroup

    bool contains(int g) const { return from_parent[g] >= 0; }
};

/// Throws NoSubgroup if elems is not a subgroup.
SubgroupData make_subgroup(const GroupPtr& parent, std::vector<int> elems);

/// G / [G, G] with the quotient map and a section.
struct Abelianization {
    FinAbGroup group;
    std::vector<GroupElem> image;  // per element of G
    std::vector<int> section;      // per element of the quotient (index_of order)
};

Abelianization abelianize(const FiniteGroup& g);

class ClassFunction {
  public:
    ClassFunction() = default;
    ClassFunction(GroupPtr g, std::vector<Cyclo> values);
    /// Builds from a per-element function; checks constancy on classes unless told not to.
    static ClassFunction from_elements(GroupPtr g, const std::function<Cyclo(int)>& value_at,
                                       bool check_classes = true);
    static ClassFunction trivial(GroupPtr g);
    static ClassFunction regular(GroupPtr g);

    const GroupPtr& group() const { return g_; }
    const Cyclo& at_class(int c) const { return v_[c]; }
    const Cyclo& operator()(int g) const { return v_[g_->class_of(g)]; }
    Cyclo degree() const { return (*this)(g_->identity()); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const;
    ClassFunction conj() const;
    /// g -> f(g^k)
    ClassFunction power_map(int k) const;

    bool operator==(const ClassFunction& o) const;

  private:
    GroupPtr g_;
    std::vector<Cyclo> v_;
};

/// (1/|G|) sum f(x) conj(g(x))
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction restrict_to(const ClassFunction& f, const SubgroupData& h);

/// Index-2 induction.
ClassFunction induce_class_function(const SubgroupData& h, const ClassFunction& f);

/// Twisted tensor lift from an index-2 subgroup. At g outside H the value is
/// f(g^2); that sign makes asai(Res V) = Sym2 V + Alt2 V * omega_{G/H}.
ClassFunction asai_class_function(const SubgroupData& h, const ClassFunction& f);

ClassFunction sym2(const ClassFunction& f);
ClassFunction alt2(const ClassFunction& f);

/// The sign character of G/H.
ClassFunction omega_of(const SubgroupData& h);

/// The 1-dimensional character attached to a character of the abelianization.
ClassFunction linear_character(const GroupPtr& g, const Abelianization& ab, const Character& chi);

std::vector<ClassFunction> linear_characters(const GroupPtr& g);
/// All 2-dimensional irreducible characters, found by inducing from index-2 subgroups.
std::vector<ClassFunction> two_dim_irreducibles(const GroupPtr& g);
/// Kernels of the order-2 linear characters.
std::vector<SubgroupData> index_two_subgroups(const GroupPtr& g);

/// Z/m x| A with A = product of Z/d_i acting by x -> u_i x. Throws InvalidAction.
GroupPtr build_semidirect(std::int64_t m, const std::vector<std::int64_t>& acting,
                          const std::vector<std::int64_t>& multipliers);

/// Element (x, a) of build_semidirect's output, a given by coordinates.
int semidirect_index(std::int64_t m, const std::vector<std::int64_t>& acting, std::int64_t x,
                     const std::vector<std::int64_t>& a);

}  // namespace periodlab
