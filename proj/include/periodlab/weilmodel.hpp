#pragma once

// A finite group G standing in for W_F, with two index-2 subgroups W_E and W_L.
// The node groups of the field diagram are the abelianizations of W_F, W_E,
// W_L, W_L' = ker(omega_E omega_L) and W_M = W_E n W_L; norms come from
// inclusion and extension maps are transfers. The oracle side keeps the groups
// themselves so class functions can be compared with the symbolic answers.

#include "periodlab/fieldnet.hpp"
#include "periodlab/oracle_rep.hpp"

namespace periodlab {

struct WeilNode {
    SubgroupData sub;  // inside G
    Abelianization ab;
};

struct WeilModel {
    GroupPtr G;
    WeilNode F, E, L, Lp, M;
    SubgroupData M_in_E;  // W_M as an index-2 subgroup of W_E
    int sigma_lift = 0;   // in W_L, outside W_E
    int tau_lift = 0;     // in W_E, outside W_L
    FieldDiagram diagram;

    /// The linear character of the node's group attached to a node character.
    ClassFunction class_function(const WeilNode& node, const Character& chi) const;
};

/// Throws NoSubgroup unless W_E and W_L are distinct index-2 subgroups of G.
WeilModel build_weil_model(const GroupPtr& G, const SubgroupData& W_E, const SubgroupData& W_L);

/// Every ordered pair of distinct index-2 subgroups.
std::vector<WeilModel> weil_models(const GroupPtr& G);

}  // namespace periodlab
