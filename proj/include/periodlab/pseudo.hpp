#pragma once

// Characters mu~ of the L node with mu~ o Nm_{M/L} = chi o Nm_{M/E}, and the
// monomial parameters Ind mu built from their extensions to M.

#include <vector>

#include "periodlab/monomial.hpp"

namespace periodlab {

struct PseudoSolution {
    std::vector<Character> solutions;  // the full solution set on L, sorted
    Character mu_tilde;
    Character partner;   // mu_tilde * omega_{M/L}
    Character omega_ML;
    std::vector<Character> extensions;  // characters of M with mu o j_{L->M} = mu_tilde
};

/// Throws PreconditionFailed when chi = chi^sigma or chi/chi^sigma does not cut out a
/// biquadratic M, NoSolution when the equation has no solution.
PseudoSolution solve_mu_tilde(const FieldDiagram& d, const Character& chi);

struct PseudoEnumeration {
    std::vector<MonomialDatum> reps;
    std::size_t reducible = 0;  // extensions with mu = mu^tau, which induce reducibly
    std::size_t unextendable = 0;  // solutions nontrivial on the kernel of j_{L->M}
    bool bijection_ok = false;  // extensions of each solution = one extension times characters trivial on j(L)
};

PseudoEnumeration enumerate_pseudo_reps(const FieldDiagram& d, const Character& chi);

Json to_json(const PseudoSolution& s);

}  // namespace periodlab
