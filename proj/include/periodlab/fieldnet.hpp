#pragma once

// The V4 tower F < E, L, L' < M. Gal(M/F) = {1, sigma, tau, sigma tau} where
// tau fixes E, sigma fixes L and sigma tau fixes L'. Each node carries a finite
// model of its idele class group; up maps are extension of ideals, down maps
// are norms.

#include <optional>
#include <string>
#include <vector>

#include "periodlab/abgroup.hpp"
#include "periodlab/abgroup_json.hpp"

namespace periodlab {

struct DiagramAssumptions {
    // tau acts as -1 on the images of the L and L' nodes in the M node
    bool tau_negates_subfield_images = false;
    // sigma acts as +1 on the image of L and -1 on the image of L'
    bool sigma_signs = false;
};

struct FieldDiagram {
    FinAbGroup F, E, L, Lp, M;

    GroupHom up_FE, up_FL, up_FLp, up_EM, up_LM, up_LpM;
    GroupHom nm_EF, nm_LF, nm_LpF, nm_ME, nm_ML, nm_MLp;

    GroupHom sigma_M, tau_M;
    GroupHom sigma_E;  // generator of Gal(E/F) on the E node
    GroupHom tau_L;    // generator of Gal(L/F)
    GroupHom tau_Lp;   // generator of Gal(L'/F)

    Character omega_EF;  // on F
    Character omega_ME;  // on E

    DiagramAssumptions assumptions;

    GroupHom sigma_tau_M() const { return sigma_M.compose(tau_M); }
    /// Norm from M down to F along the E branch.
    GroupHom nm_MF() const { return nm_EF.compose(nm_ME); }
};

struct DiagramCheck {
    std::string name;
    bool ok = true;
    std::string witness;  // first generator on which the identity fails
};

struct DiagramReport {
    std::vector<DiagramCheck> checks;

    bool ok() const;
    std::vector<DiagramCheck> failures() const;
};

/// Checks every structural identity; never throws.
DiagramReport validate_diagram(const FieldDiagram& d);

enum class GaloisType { Biquadratic, CyclicQuartic, NonGalois };

std::string_view to_string(GaloisType t);

struct GaloisClassification {
    GaloisType type;
    Character restriction;  // omega restricted to the F node
    bool sigma_invariant;   // omega == omega o sigma_E
};

/// Galois type over F of the quadratic extension of E cut out by omega.
GaloisClassification classify_quadratic_extension(const Character& omega, const FieldDiagram& d);

/// chi o Nm_{E/F}
Character base_change_character(const Character& chi, const FieldDiagram& d);

/// Apply an automorphism to a character: chi^g = chi o g.
Character act(const Character& chi, const GroupHom& g);

struct EtaConstruction {
    Character eta;
    std::optional<Character> seed;  // set when eta = seed / seed^tau
};

/// A character of order n of the L node that is trivial on the image of the F
/// node. Prefers the split-place route eta = seed/seed^tau with seed and
/// seed/seed^tau both of order n; otherwise searches directly.
EtaConstruction construct_eta(const FinAbGroup& L, const GroupHom& tau_L, const GroupHom& up_FL, std::int64_t n);
EtaConstruction construct_eta(const FieldDiagram& d, std::int64_t n);

Json diagram_to_json(const FieldDiagram& d);
FieldDiagram diagram_from_json(const Json& j);

}  // namespace periodlab
