#include "periodlab/fieldnet.hpp"

#include <sstream>

namespace periodlab {

bool DiagramReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::vector<DiagramCheck> DiagramReport::failures() const {
    std::vector<DiagramCheck> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c);
    return out;
}

namespace {

// Compare two homs generator by generator, naming the first mismatch.
DiagramCheck hom_check(const std::string& name, const std::function<GroupHom()>& lhs,
                       const std::function<GroupHom()>& rhs) {
    DiagramCheck c{name, true, ""};
    try {
        GroupHom a = lhs(), b = rhs();
        if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain())) {
            c.ok = false;
            c.witness = "signature mismatch";
            return c;
        }
        for (std::size_t j = 0; j < a.domain().rank(); ++j) {
            auto x = a.image_of_generator(j), y = b.image_of_generator(j);
            if (!(x == y)) {
                std::ostringstream os;
                os << "generator " << j << ": " << x << " vs " << y;
                c.ok = false;
                c.witness = os.str();
                return c;
            }
        }
    } catch (const std::exception& e) {
        c.ok = false;
        c.witness = e.what();
    }
    return c;
}

DiagramCheck character_check(const std::string& name, const std::function<std::string()>& body) {
    DiagramCheck c{name, true, ""};
    try {
        c.witness = body();
        c.ok = c.witness.empty();
    } catch (const std::exception& e) {
        c.ok = false;
        c.witness = e.what();
    }
    return c;
}

std::string quadratic_killing_norms(const Character& omega, const GroupHom& norm) {
    if (!(omega.group() == norm.codomain())) return "character lives on the wrong node";
    if (omega.order() != 2) return "order is " + std::to_string(omega.order());
    auto pulled = pullback_character(omega, norm);
    if (!pulled.is_trivial()) {
        std::ostringstream os;
        os << "nontrivial on norms: " << pulled;
        return os.str();
    }
    return "";
}

}  // namespace

DiagramReport validate_diagram(const FieldDiagram& d) {
    DiagramReport r;
    auto& c = r.checks;
    auto id = [](const FinAbGroup& g) { return GroupHom::identity(g); };
    auto two = [](const FinAbGroup& g) { return GroupHom::scalar(g, 2); };

    c.push_back(hom_check("sigma^2 = 1", [&] { return d.sigma_M.compose(d.sigma_M); }, [&] { return id(d.M); }));
    c.push_back(hom_check("tau^2 = 1", [&] { return d.tau_M.compose(d.tau_M); }, [&] { return id(d.M); }));
    c.push_back(hom_check("sigma tau = tau sigma", [&] { return d.sigma_M.compose(d.tau_M); },
                          [&] { return d.tau_M.compose(d.sigma_M); }));
    c.push_back(hom_check("sigma_E^2 = 1", [&] { return d.sigma_E.compose(d.sigma_E); }, [&] { return id(d.E); }));
    c.push_back(hom_check("tau_L^2 = 1", [&] { return d.tau_L.compose(d.tau_L); }, [&] { return id(d.L); }));
    c.push_back(hom_check("tau_L'^2 = 1", [&] { return d.tau_Lp.compose(d.tau_Lp); }, [&] { return id(d.Lp); }));

    c.push_back(hom_check("norm o extension = x2 (E/F)", [&] { return d.nm_EF.compose(d.up_FE); }, [&] { return two(d.F); }));
    c.push_back(hom_check("norm o extension = x2 (L/F)", [&] { return d.nm_LF.compose(d.up_FL); }, [&] { return two(d.F); }));
    c.push_back(hom_check("norm o extension = x2 (L'/F)", [&] { return d.nm_LpF.compose(d.up_FLp); }, [&] { return two(d.F); }));
    c.push_back(hom_check("norm o extension = x2 (M/E)", [&] { return d.nm_ME.compose(d.up_EM); }, [&] { return two(d.E); }));
    c.push_back(hom_check("norm o extension = x2 (M/L)", [&] { return d.nm_ML.compose(d.up_LM); }, [&] { return two(d.L); }));
    c.push_back(hom_check("norm o extension = x2 (M/L')", [&] { return d.nm_MLp.compose(d.up_LpM); }, [&] { return two(d.Lp); }));

    c.push_back(hom_check("extension o norm = 1 + sigma (E/F)", [&] { return d.up_FE.compose(d.nm_EF); },
                          [&] { return id(d.E).plus(d.sigma_E); }));
    c.push_back(hom_check("extension o norm = 1 + tau (L/F)", [&] { return d.up_FL.compose(d.nm_LF); },
                          [&] { return id(d.L).plus(d.tau_L); }));
    c.push_back(hom_check("extension o norm = 1 + tau (L'/F)", [&] { return d.up_FLp.compose(d.nm_LpF); },
                          [&] { return id(d.Lp).plus(d.tau_Lp); }));
    c.push_back(hom_check("extension o norm = 1 + tau (M/E)", [&] { return d.up_EM.compose(d.nm_ME); },
                          [&] { return id(d.M).plus(d.tau_M); }));
    c.push_back(hom_check("extension o norm = 1 + sigma (M/L)", [&] { return d.up_LM.compose(d.nm_ML); },
                          [&] { return id(d.M).plus(d.sigma_M); }));
    c.push_back(hom_check("extension o norm = 1 + sigma tau (M/L')", [&] { return d.up_LpM.compose(d.nm_MLp); },
                          [&] { return id(d.M).plus(d.sigma_tau_M()); }));

    c.push_back(hom_check("tau fixes E", [&] { return d.tau_M.compose(d.up_EM); }, [&] { return d.up_EM; }));
    c.push_back(hom_check("sigma fixes L", [&] { return d.sigma_M.compose(d.up_LM); }, [&] { return d.up_LM; }));
    c.push_back(hom_check("sigma tau fixes L'", [&] { return d.sigma_tau_M().compose(d.up_LpM); }, [&] { return d.up_LpM; }));
    c.push_back(hom_check("sigma-equivariant extension E -> M", [&] { return d.sigma_M.compose(d.up_EM); },
                          [&] { return d.up_EM.compose(d.sigma_E); }));
    c.push_back(hom_check("tau-equivariant extension L -> M", [&] { return d.tau_M.compose(d.up_LM); },
                          [&] { return d.up_LM.compose(d.tau_L); }));
    c.push_back(hom_check("sigma-equivariant extension L' -> M", [&] { return d.sigma_M.compose(d.up_LpM); },
                          [&] { return d.up_LpM.compose(d.tau_Lp); }));
    c.push_back(hom_check("sigma-equivariant norm M -> E", [&] { return d.nm_ME.compose(d.sigma_M); },
                          [&] { return d.sigma_E.compose(d.nm_ME); }));
    c.push_back(hom_check("tau-equivariant norm M -> L", [&] { return d.nm_ML.compose(d.tau_M); },
                          [&] { return d.tau_L.compose(d.nm_ML); }));
    c.push_back(hom_check("tau-equivariant norm M -> L'", [&] { return d.nm_MLp.compose(d.tau_M); },
                          [&] { return d.tau_Lp.compose(d.nm_MLp); }));

    c.push_back(hom_check("norm M -> F via E = via L", [&] { return d.nm_EF.compose(d.nm_ME); },
                          [&] { return d.nm_LF.compose(d.nm_ML); }));
    c.push_back(hom_check("norm M -> F via E = via L'", [&] { return d.nm_EF.compose(d.nm_ME); },
                          [&] { return d.nm_LpF.compose(d.nm_MLp); }));
    c.push_back(hom_check("extension F -> M via E = via L", [&] { return d.up_EM.compose(d.up_FE); },
                          [&] { return d.up_LM.compose(d.up_FL); }));
    c.push_back(hom_check("extension F -> M via E = via L'", [&] { return d.up_EM.compose(d.up_FE); },
                          [&] { return d.up_LpM.compose(d.up_FLp); }));

    c.push_back(character_check("omega_E/F quadratic and trivial on norms",
                                [&] { return quadratic_killing_norms(d.omega_EF, d.nm_EF); }));
    c.push_back(character_check("omega_M/E quadratic and trivial on norms",
                                [&] { return quadratic_killing_norms(d.omega_ME, d.nm_ME); }));

    if (d.assumptions.tau_negates_subfield_images) {
        c.push_back(hom_check("tau-action: -1 on image of L", [&] { return d.tau_M.compose(d.up_LM); },
                              [&] { return GroupHom::scalar(d.M, -1).compose(d.up_LM); }));
        c.push_back(hom_check("tau-action: -1 on image of L'", [&] { return d.tau_M.compose(d.up_LpM); },
                              [&] { return GroupHom::scalar(d.M, -1).compose(d.up_LpM); }));
    }
    if (d.assumptions.sigma_signs) {
        c.push_back(hom_check("sigma-action: +1 on image of L", [&] { return d.sigma_M.compose(d.up_LM); },
                              [&] { return d.up_LM; }));
        c.push_back(hom_check("sigma-action: -1 on image of L'", [&] { return d.sigma_M.compose(d.up_LpM); },
                              [&] { return GroupHom::scalar(d.M, -1).compose(d.up_LpM); }));
    }
    return r;
}

std::string_view to_string(GaloisType t) {
    switch (t) {
        case GaloisType::Biquadratic: return "Biquadratic";
        case GaloisType::CyclicQuartic: return "CyclicQuartic";
        case GaloisType::NonGalois: return "NonGalois";
    }
    return "Unknown";
}

Character act(const Character& chi, const GroupHom& g) { return pullback_character(chi, g); }

GaloisClassification classify_quadratic_extension(const Character& omega, const FieldDiagram& d) {
    if (!(omega.group() == d.E)) throw Error(ErrorCode::GroupMismatch, "omega must live on the E node");
    if (omega.order() != 2)
        throw Error(ErrorCode::NotQuadratic, "omega has order " + std::to_string(omega.order()) + ", expected 2");
    GaloisClassification out{GaloisType::NonGalois, pullback_character(omega, d.up_FE), act(omega, d.sigma_E) == omega};
    if (out.restriction.is_trivial())
        out.type = GaloisType::Biquadratic;
    else if (out.restriction == d.omega_EF)
        out.type = GaloisType::CyclicQuartic;
    if ((out.type == GaloisType::NonGalois) == out.sigma_invariant)
        throw Error(ErrorCode::PreconditionFailed, "restriction test and sigma-invariance disagree; diagram is inconsistent");
    return out;
}

Character base_change_character(const Character& chi, const FieldDiagram& d) {
    if (!(chi.group() == d.F)) throw Error(ErrorCode::GroupMismatch, "character must live on the F node");
    return pullback_character(chi, d.nm_EF);
}

EtaConstruction construct_eta(const FinAbGroup& L, const GroupHom& tau_L, const GroupHom& up_FL, std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidOrder, "order must be >= 1");
    if (!(tau_L.domain() == L) || !(up_FL.codomain() == L))
        throw Error(ErrorCode::GroupMismatch, "tau and the extension map must act on the L node");
    auto valid = [&](const Character& eta) {
        return eta.order() == n && pullback_character(eta, up_FL).is_trivial();
    };
    std::optional<EtaConstruction> found;
    for_each_character(L, [&](const Character& seed) {
        if (found || seed.order() != n) return;
        Character ratio = seed / act(seed, tau_L);
        if (ratio.order() == n && valid(ratio)) found = EtaConstruction{ratio, seed};
    });
    if (!found)
        for_each_character(L, [&](const Character& eta) {
            if (!found && valid(eta)) found = EtaConstruction{eta, std::nullopt};
        });
    if (!found)
        throw Error(ErrorCode::NoSuchCharacter,
                    "no character of order " + std::to_string(n) + " trivial on the F image; enlarge the L node");
    // re-verify rather than trust the search
    if (!valid(found->eta)) throw Error(ErrorCode::NoSuchCharacter, "constructed character failed re-verification");
    return *found;
}

EtaConstruction construct_eta(const FieldDiagram& d, std::int64_t n) { return construct_eta(d.L, d.tau_L, d.up_FL, n); }

// ---------------------------------------------------------------------------
// JSON

namespace {

const char* kNodes[] = {"F", "E", "L", "Lp", "M"};

}  // namespace

Json diagram_to_json(const FieldDiagram& d) {
    Json j;
    j["nodes"] = {{"F", to_json(d.F)}, {"E", to_json(d.E)}, {"L", to_json(d.L)}, {"Lp", to_json(d.Lp)}, {"M", to_json(d.M)}};
    j["up_maps"] = {{"F_E", to_json(d.up_FE)},  {"F_L", to_json(d.up_FL)}, {"F_Lp", to_json(d.up_FLp)},
                    {"E_M", to_json(d.up_EM)},  {"L_M", to_json(d.up_LM)}, {"Lp_M", to_json(d.up_LpM)}};
    j["down_maps"] = {{"E_F", to_json(d.nm_EF)},  {"L_F", to_json(d.nm_LF)}, {"Lp_F", to_json(d.nm_LpF)},
                      {"M_E", to_json(d.nm_ME)},  {"M_L", to_json(d.nm_ML)}, {"M_Lp", to_json(d.nm_MLp)}};
    j["sigma"] = {{"M", to_json(d.sigma_M)}, {"E", to_json(d.sigma_E)}};
    j["tau"] = {{"M", to_json(d.tau_M)}, {"L", to_json(d.tau_L)}, {"Lp", to_json(d.tau_Lp)}};
    j["omega_EF"] = to_json(d.omega_EF);
    j["omega_ME"] = to_json(d.omega_ME);
    j["assumptions"] = {{"tau_negates_subfield_images", d.assumptions.tau_negates_subfield_images},
                        {"sigma_signs", d.assumptions.sigma_signs}};
    return j;
}

FieldDiagram diagram_from_json(const Json& j) {
    auto need = [](const Json& obj, const std::string& key) -> const Json& {
        if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorCode::ParseError, "diagram is missing '" + key + "'");
        return obj.at(key);
    };
    FieldDiagram d;
    const Json& nodes = need(j, "nodes");
    for (const char* n : kNodes) need(nodes, n);
    d.F = group_from_json(nodes.at("F"));
    d.E = group_from_json(nodes.at("E"));
    d.L = group_from_json(nodes.at("L"));
    d.Lp = group_from_json(nodes.at("Lp"));
    d.M = group_from_json(nodes.at("M"));

    auto hom = [&](const Json& obj, const std::string& key, const FinAbGroup& dom, const FinAbGroup& cod) {
        GroupHom h = hom_from_json(need(obj, key));
        if (!(h.domain() == dom) || !(h.codomain() == cod))
            throw Error(ErrorCode::ParseError, "map '" + key + "' has the wrong domain or codomain");
        return h;
    };
    const Json& up = need(j, "up_maps");
    d.up_FE = hom(up, "F_E", d.F, d.E);
    d.up_FL = hom(up, "F_L", d.F, d.L);
    d.up_FLp = hom(up, "F_Lp", d.F, d.Lp);
    d.up_EM = hom(up, "E_M", d.E, d.M);
    d.up_LM = hom(up, "L_M", d.L, d.M);
    d.up_LpM = hom(up, "Lp_M", d.Lp, d.M);
    const Json& down = need(j, "down_maps");
    d.nm_EF = hom(down, "E_F", d.E, d.F);
    d.nm_LF = hom(down, "L_F", d.L, d.F);
    d.nm_LpF = hom(down, "Lp_F", d.Lp, d.F);
    d.nm_ME = hom(down, "M_E", d.M, d.E);
    d.nm_ML = hom(down, "M_L", d.M, d.L);
    d.nm_MLp = hom(down, "M_Lp", d.M, d.Lp);
    const Json& sigma = need(j, "sigma");
    d.sigma_M = hom(sigma, "M", d.M, d.M);
    d.sigma_E = hom(sigma, "E", d.E, d.E);
    const Json& tau = need(j, "tau");
    d.tau_M = hom(tau, "M", d.M, d.M);
    d.tau_L = hom(tau, "L", d.L, d.L);
    d.tau_Lp = hom(tau, "Lp", d.Lp, d.Lp);
    d.omega_EF = character_from_json(need(j, "omega_EF"), d.F);
    d.omega_ME = character_from_json(need(j, "omega_ME"), d.E);
    if (j.contains("assumptions")) {
        const Json& a = j.at("assumptions");
        d.assumptions.tau_negates_subfield_images = a.value("tau_negates_subfield_images", false);
        d.assumptions.sigma_signs = a.value("sigma_signs", false);
    }
    return d;
}

}  // namespace periodlab
