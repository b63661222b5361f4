#pragma once

// Monomial parameters Ind_{W_M}^{W_E} mu on a field diagram: self-twists,
// quadratic sources, twisted tensor decompositions, distinguishing sets and the
// factorizability verdict.

#include <optional>
#include <string>
#include <vector>

#include "periodlab/fieldnet.hpp"

namespace periodlab {

struct MonomialDatum {
    FieldDiagram diagram;
    Character mu;                 // on the M node
    std::optional<Character> eta; // origin on the L node, when the datum is Res of Ind eta

    /// Throws ReducibleParameter when mu = mu^tau, GroupMismatch when mu is not on M.
    void validate() const;
};

/// Builds the datum obtained by restricting Ind_{W_L}^{W_F} eta to W_E: mu = eta o Nm_{M/L}.
MonomialDatum datum_from_eta(const FieldDiagram& d, const Character& eta);

struct RepDescriptor {
    FieldDiagram diagram;
    std::optional<MonomialDatum> monomial;  // empty for a non-monomial parameter
    std::string tag;
    // for non-monomial parameters the only provenance is whether it is known to be distinguished
    std::optional<bool> known_distinguished;

    static RepDescriptor from_monomial(MonomialDatum m);
    static RepDescriptor non_monomial(FieldDiagram d, std::string tag, std::optional<bool> distinguished);
    bool is_monomial() const { return monomial.has_value(); }
};

/// Characters nu of the E node with Ind mu (x) nu = Ind mu; order 1, 2 or 4.
/// Throws ModelTooSmall when mu/mu^tau has order 2 but does not descend to E.
std::vector<Character> self_twists(const RepDescriptor& r);

struct QuadraticSource {
    Character omega;  // on the E node
    GaloisClassification galois;
};

std::vector<QuadraticSource> quadratic_sources(const RepDescriptor& r);

struct FormalSummand {
    enum class Kind { Character, Induced };
    Kind kind = Kind::Character;
    std::string node;  // node carrying chi: "F", "E", "L", "Lp" or "M"
    Character chi;
    int dimension() const { return kind == Kind::Induced ? 2 : 1; }
};

std::ostream& operator<<(std::ostream& os, const FormalSummand& s);

struct AsaiDecomposition {
    std::vector<FormalSummand> summands;
    bool contains_trivial = false;
    int dimension() const;
};

/// Twisted tensor lift of Ind_M^E mu down to F: Ind_L^F(mu o j_L) + Ind_L'^F(mu o j_L'),
/// with each summand split into two characters of F when its inducing character is invariant.
AsaiDecomposition asai_of_monomial(const MonomialDatum& m);

/// The decomposition Ind(eta^2) + 1 + omega_E omega_L for a datum with an origin eta
/// that is trivial on the image of F. Throws MissingOrigin without one.
AsaiDecomposition asai_decompose(const RepDescriptor& r);

/// Ind mu1 (x) Ind mu2 over E = Ind(mu1 mu2) + Ind(mu1 mu2^tau), each split over E when invariant.
std::vector<FormalSummand> tensor_monomial(const FieldDiagram& d, const Character& mu1, const Character& mu2);

struct DistinguishingSet {
    std::vector<Character> X;  // on F
    std::vector<Character> Y;  // self-twists trivial on the image of F, on E
    std::vector<std::pair<Character, Character>> witness;  // chi -> chi o Nm_{E/F}
    bool bijective = false;
};

/// Throws InsufficientProvenance for a non-monomial parameter without a distinction flag.
DistinguishingSet distinguishing_set(const RepDescriptor& r);

struct Factorizability {
    bool factorizable = true;
    int d = 1;
    bool d_asserted = false;  // the values 2 and 4 are stated without proof
    int x_size = 0;
    bool d_matches_x = true;
};

/// Throws NotDistinguished unless distinguished, InvalidSourceCount for source counts other than 1 or 3.
Factorizability factorizability(const RepDescriptor& r, bool distinguished);

struct PseudoCheck {
    bool holds = false;
    std::string branch;  // "5", "6", "both" or "none"
};

/// mu o (1 + sigma) = chi o Nm_{M/E} (branch 5) or mu o (1 + sigma tau) = chi o Nm_{M/E} (branch 6).
/// Throws GaloisInvariantChi when chi = chi^sigma and PreconditionFailed when chi/chi^sigma is not omega_{M/E}.
PseudoCheck pseudo_condition_check(const MonomialDatum& m, const Character& chi);

/// The character of F cutting out L, L' respectively (annihilators of the norm images).
Character omega_LF(const FieldDiagram& d);
Character omega_LpF(const FieldDiagram& d);
/// The character of L cutting out M.
Character omega_ML(const FieldDiagram& d);

Json to_json(const FormalSummand& s);
Json to_json(const AsaiDecomposition& a);
Json to_json(const Factorizability& f);

}  // namespace periodlab
