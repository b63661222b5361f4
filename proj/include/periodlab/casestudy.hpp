#pragma once

// End-to-end reproductions: the class-number-16 counterexample over Q(i) and
// the order-8 eta construction on a dihedral Weil-group model.

#include <optional>
#include <string>
#include <vector>

#include "periodlab/fieldnet.hpp"
#include "periodlab/weilmodel.hpp"

namespace periodlab {

struct CaseCheck {
    std::string id;
    std::string claim;
    std::string anchor;  // quoted source sentence
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct CaseReport {
    std::string title;
    std::vector<CaseCheck> checks;
    std::vector<std::string> notes;  // rules applied without a model check
    std::string verdict;

    bool passed() const;
    void add(std::string id, std::string claim, std::string anchor, std::string computed, std::string expected);
    void add(std::string id, std::string claim, std::string anchor, bool ok);
};

/// Class groups of Q(sqrt -257) and Q(sqrt 257) recomputed, M node Z/24 = Z/8 + Z/3.
/// Throws ClassGroupMismatch if the recomputed groups differ from [16] and [3].
FieldDiagram build_257_diagram();

/// mu is given by its value n/24 on the generator of the M node; the default is 14/24.
CaseReport run_example_257(std::optional<std::int64_t> mu_numerator = std::nullopt);

/// Z/16 x| Z/2 by inversion with W_L the cyclic subgroup and W_E a dihedral one.
WeilModel dihedral32_model();

/// Throws FixtureTooSmall if the model has no eta of the requested order.
CaseReport run_section5_case(std::int64_t order = 8);

Json to_json(const CaseReport& r);
std::string to_text(const CaseReport& r);

}  // namespace periodlab
