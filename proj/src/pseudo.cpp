#include "periodlab/pseudo.hpp"

#include <algorithm>

namespace periodlab {

PseudoSolution solve_mu_tilde(const FieldDiagram& d, const Character& chi) {
    if (!(chi.group() == d.E)) throw Error(ErrorCode::GroupMismatch, "chi must live on the E node");
    const Character ratio = chi / act(chi, d.sigma_E);
    if (ratio.is_trivial()) throw Error(ErrorCode::PreconditionFailed, "chi is Galois invariant");
    if (!(ratio == d.omega_ME)) throw Error(ErrorCode::PreconditionFailed, "chi/chi^sigma does not cut out M");
    if (classify_quadratic_extension(ratio, d).type != GaloisType::Biquadratic)
        throw Error(ErrorCode::PreconditionFailed, "M is not biquadratic over F");

    PseudoSolution s;
    s.omega_ML = omega_ML(d);
    s.solutions = all_pullback_solutions(d.nm_ML, pullback_character(chi, d.nm_ME));
    if (s.solutions.empty())
        throw Error(ErrorCode::NoSolution, "no character of L matches chi on norms from M; chi o Nm = " +
                                               to_json(pullback_character(chi, d.nm_ME)).dump());
    if (s.solutions.size() != 2)
        throw Error(ErrorCode::PreconditionFailed, std::to_string(s.solutions.size()) + " solutions, expected 2");
    s.mu_tilde = s.solutions[0];
    s.partner = s.mu_tilde * s.omega_ML;
    if (!(s.partner == s.solutions[1])) throw Error(ErrorCode::PreconditionFailed, "solutions do not differ by omega_{M/L}");
    s.extensions = all_pullback_solutions(d.up_LM, s.mu_tilde);
    return s;
}

PseudoEnumeration enumerate_pseudo_reps(const FieldDiagram& d, const Character& chi) {
    const auto sol = solve_mu_tilde(d, chi);
    const auto trivial_on_image = annihilator_of_image(d.up_LM);
    PseudoEnumeration out;
    out.bijection_ok = true;
    for (const auto& mt : sol.solutions) {
        auto ext = all_pullback_solutions(d.up_LM, mt);
        if (ext.empty()) {
            ++out.unextendable;
            continue;
        }
        std::vector<Character> shifted;
        for (const auto& psi : trivial_on_image) shifted.push_back(ext.front() * psi);
        std::sort(shifted.begin(), shifted.end());
        if (shifted != ext) out.bijection_ok = false;
        for (const auto& mu : ext) {
            if (act(mu, d.tau_M) == mu) {
                ++out.reducible;
                continue;
            }
            out.reps.push_back(MonomialDatum{d, mu, std::nullopt});
        }
    }
    return out;
}

Json to_json(const PseudoSolution& s) {
    Json orbit = Json::array();
    for (const auto& x : s.solutions) orbit.push_back(to_json(x));
    return {{"mu_tilde", to_json(s.mu_tilde)},
            {"orbit", orbit},
            {"omega_ML", to_json(s.omega_ML)},
            {"extensions_count", s.extensions.size()}};
}

}  // namespace periodlab
