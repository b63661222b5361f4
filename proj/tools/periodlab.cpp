#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "periodlab/casestudy.hpp"
#include "periodlab/localrules.hpp"
#include "periodlab/monomial.hpp"
#include "periodlab/pseudo.hpp"
#include "periodlab/quadclass.hpp"
#include "periodlab/selftest.hpp"
#include "periodlab/ssprimes.hpp"

using namespace periodlab;

namespace {

enum Exit { Ok = 0, Violation = 1, Usage = 2 };

struct Output {
    bool text = false;
};

// text mode renders the same JSON structure as indented key: value lines
void render(std::ostream& os, const Json& j, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                render(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                os << pad << "-\n";
                render(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const Json& j, const Output& out) {
    if (out.text)
        render(std::cout, j);
    else
        std::cout << j.dump(2) << "\n";
}

Json read_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

// built-in names, a JSON file, or inline JSON
FieldDiagram load_diagram(const std::string& arg) {
    if (arg == "257") return build_257_diagram();
    if (arg == "dihedral32") return dihedral32_model().diagram;
    return diagram_from_json(read_json(arg));
}

std::vector<Fraction> parse_fractions(const std::string& s) {
    std::vector<Fraction> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Fraction::parse(item));
    return out;
}

// either {"components": [...]} or a comma-separated list of fractions
Character parse_character(const std::string& s, const FinAbGroup& g) {
    if (!s.empty() && s[0] == '{') return character_from_json(read_json(s), g);
    return Character::from_fractions(g, parse_fractions(s));
}

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ClassGroupMismatch:
        case ErrorCode::InvalidSourceCount:
        case ErrorCode::InvalidOrder:
        case ErrorCode::NotAGroup:
        case ErrorCode::FixtureTooSmall:
            return Violation;
        default:
            return Usage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodlab: distinction, twisted tensor lifts and period invariants on finite models"};
    app.require_subcommand(1);
    Output out;
    int code = Ok;

    auto* cg = app.add_subcommand("classgroup", "class group of a fundamental discriminant");
    std::int64_t disc = 0;
    bool narrow = false, forms = false;
    cg->add_option("--disc", disc, "fundamental discriminant")->required();
    cg->add_flag("--narrow", narrow, "narrow class group (D > 0)");
    cg->add_flag("--forms", forms, "list the reduced representatives");
    cg->add_flag("--text", out.text, "text output");
    cg->callback([&] {
        const auto g = disc < 0 ? class_group(disc) : real_class_group(disc, narrow);
        Json j{{"discriminant", disc}, {"invariants", g.group.invariants()}, {"h", g.h()}};
        if (disc > 0) j["narrow"] = narrow;
        if (forms) {
            Json fs = Json::array();
            for (const auto& f : g.representatives) fs.push_back({f.a, f.b, f.c});
            j["forms"] = fs;
        }
        emit(j, out);
    });

    std::string diagram, chi_s, mu_s, omega_s;
    auto* gt = app.add_subcommand("galois-type", "Galois type over F of the quadratic extension of E cut out by omega");
    gt->add_option("--diagram", diagram, "257, dihedral32, a JSON file or inline JSON")->required();
    gt->add_option("--omega", omega_s, "quadratic character of the E node")->required();
    gt->add_flag("--text", out.text, "text output");
    gt->callback([&] {
        const auto d = load_diagram(diagram);
        const auto c = classify_quadratic_extension(parse_character(omega_s, d.E), d);
        emit({{"type", std::string(to_string(c.type))}, {"restriction", to_json(c.restriction)}, {"sigma_invariant", c.sigma_invariant}},
             out);
    });

    bool non_monomial = false;
    std::optional<bool> distinguished;
    auto* fz = app.add_subcommand("factorizable", "factorizability verdict for a distinguished parameter");
    fz->add_option("--diagram", diagram, "257, dihedral32, a JSON file or inline JSON")->required();
    fz->add_option("--mu", mu_s, "character of the M node (monomial parameter)");
    fz->add_flag("--non-monomial", non_monomial, "non-monomial parameter");
    fz->add_option("--distinguished", distinguished, "distinction status of a non-monomial parameter (true/false)");
    fz->add_flag("--text", out.text, "text output");
    fz->callback([&] {
        const auto d = load_diagram(diagram);
        if (non_monomial == !mu_s.empty()) throw CLI::ValidationError("give exactly one of --mu and --non-monomial");
        if (non_monomial) {
            if (!distinguished) throw CLI::ValidationError("--non-monomial needs --distinguished");
            const auto r = RepDescriptor::non_monomial(d, "cuspidal", distinguished);
            if (!*distinguished) {
                emit({{"verdict", "NotDistinguished"}}, out);
                return;
            }
            emit(to_json(factorizability(r, true)), out);
            return;
        }
        const auto r = RepDescriptor::from_monomial({d, parse_character(mu_s, d.M), std::nullopt});
        const auto ds = distinguishing_set(r);
        Json x = Json::array();
        for (const auto& c : ds.X) x.push_back(to_json(c));
        const bool dist = std::binary_search(ds.X.begin(), ds.X.end(), Character::trivial(d.F));
        Json j = dist ? to_json(factorizability(r, true)) : Json{{"verdict", "NotDistinguished"}};
        j["X"] = x;
        Json src = Json::array();
        for (const auto& s : quadratic_sources(r))
            src.push_back({{"omega", to_json(s.omega)}, {"type", std::string(to_string(s.galois.type))}});
        j["sources"] = src;
        emit(j, out);
    });

    auto* ps = app.add_subcommand("pseudo", "solve mu~ o Nm_{M/L} = chi o Nm_{M/E} and enumerate the pseudo-distinguished parameters");
    ps->add_option("--diagram", diagram, "257, dihedral32, a JSON file or inline JSON")->required();
    ps->add_option("--chi", chi_s, "character of the E node with chi/chi^sigma = omega_{M/E}")->required();
    ps->add_flag("--text", out.text, "text output");
    ps->callback([&] {
        const auto d = load_diagram(diagram);
        const auto chi = parse_character(chi_s, d.E);
        Json j = to_json(solve_mu_tilde(d, chi));
        const auto en = enumerate_pseudo_reps(d, chi);
        Json reps = Json::array();
        for (const auto& m : en.reps) reps.push_back(to_json(m.mu));
        j["parameters"] = reps;
        j["reducible"] = en.reducible;
        j["unextendable"] = en.unextendable;
        emit(j, out);
    });

    std::string place_s, chi1_s, chi2_s;
    bool equal = false;
    auto* lc = app.add_subcommand("local", "SL2(k)-distinction of a principal series Ps(chi1, chi2) of GL2(K)");
    lc->add_option("--place", place_s, R"(e.g. {"kind":"inert","q":3,"N":4} or {"kind":"split","units":4,"N":2})")->required();
    lc->add_option("--chi1", chi1_s, "character of K^*: one fraction per coordinate")->required();
    lc->add_option("--chi2", chi2_s, "character of K^*: one fraction per coordinate");
    lc->add_flag("--equal", equal, "list the characters nu for which Ps(chi1, chi1) is nu-distinguished");
    lc->add_flag("--text", out.text, "text output");
    lc->callback([&] {
        const auto p = place_from_json(read_json(place_s));
        const auto c1 = p.K_character(parse_fractions(chi1_s));
        Json j{{"place", {{"kind", std::string(to_string(p.kind))}, {"K", to_json(p.K)}, {"k", to_json(p.k)}}}};
        if (equal) {
            Json nus = Json::array();
            for (const auto& nu : equal_character_distinctions(c1, p)) nus.push_back(to_json(nu));
            j["nu"] = nus;
        } else {
            if (chi2_s.empty()) throw CLI::ValidationError("--chi2 is required unless --equal is given");
            j["verdict"] = to_json(ps_sl2_distinguished(c1, p.K_character(parse_fractions(chi2_s)), p));
        }
        emit(j, out);
    });

    std::optional<std::int64_t> mu_num;
    bool json_flag = false;
    auto* ex = app.add_subcommand("example-257", "the Q(sqrt -257) counterexample over Q(i), step by step");
    ex->add_flag("--json", json_flag, "JSON output (default)");
    ex->add_flag("--text", out.text, "numbered checklist");
    ex->add_option("--mu", mu_num, "value n/24 of mu on the generator of C_M (default: chosen automatically)");
    ex->callback([&] {
        const auto r = run_example_257(mu_num);
        if (out.text && !json_flag)
            std::cout << to_text(r);
        else
            std::cout << to_json(r).dump(2) << "\n";
        if (!r.passed()) code = Violation;
    });

    std::int64_t order = 8;
    auto* s5 = app.add_subcommand("section5", "order-8 eta on the order-32 dihedral model: abstractly distinguished, not distinguished");
    s5->add_option("--order", order, "order of eta")->check(CLI::PositiveNumber);
    s5->add_flag("--json", json_flag, "JSON output (default)");
    s5->add_flag("--text", out.text, "numbered checklist");
    s5->callback([&] {
        const auto r = run_section5_case(order);
        if (out.text && !json_flag)
            std::cout << to_text(r);
        else
            std::cout << to_json(r).dump(2) << "\n";
        if (!r.passed()) code = Violation;
    });

    std::string curve_s = "0,0,0,-1,0", format = "csv";
    std::int64_t bound = 1000;
    int jobs = 1;
    bool all = false;
    auto* ss = app.add_subcommand("ssprimes", "primes p <= bound with a_p = 0 for an elliptic curve over Q");
    ss->add_option("--curve", curve_s, "a1,a2,a3,a4,a6")->capture_default_str();
    ss->add_option("--bound", bound, "largest prime to test")->capture_default_str()->check(CLI::Range(std::int64_t{2}, std::int64_t{100000000}));
    ss->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    ss->add_option("--format", format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    ss->add_flag("--all", all, "report every good prime, not only a_p = 0");
    ss->callback([&] {
        const auto e = EllipticCurve::parse(curve_s);
        const auto recs = all ? scan_traces(e, bound, jobs) : scan_supersingular(e, bound, jobs);
        if (format == "csv")
            std::cout << scan_to_csv(recs);
        else
            std::cout << scan_to_json(e, bound, recs).dump(2) << "\n";
    });

    int suite = 0;
    auto* st = app.add_subcommand("selftest", "run the brute-force oracle suites");
    st->add_option("--suite", suite, "run a single suite (1-9)")->check(CLI::Range(1, kSuiteCount));
    st->add_option("--jobs", jobs, "worker threads for the scanner suite")->check(CLI::PositiveNumber);
    st->add_flag("--text", out.text, "text output");
    st->callback([&] {
        std::vector<SuiteResult> rs;
        if (suite)
            rs.push_back(run_suite(suite, jobs));
        else
            rs = run_selftest(jobs);
        Json j = Json::array();
        for (const auto& r : rs) {
            j.push_back(to_json(r));
            if (!r.passed) code = Violation;
        }
        if (out.text) {
            for (const auto& r : rs)
                std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
        } else {
            std::cout << j.dump(2) << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    } catch (const Error& e) {
        std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return Usage;
    }
    return code;
}
