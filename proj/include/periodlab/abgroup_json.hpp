#pragma once

#include "json.hpp"

#include "periodlab/abgroup.hpp"

namespace periodlab {

using Json = nlohmann::json;

Json to_json(const FinAbGroup& g);
Json to_json(const GroupElem& x);
Json to_json(const GroupHom& f);
Json to_json(const Character& chi);

FinAbGroup group_from_json(const Json& j);
GroupElem elem_from_json(const Json& j, const FinAbGroup& parent);
GroupHom hom_from_json(const Json& j);
Character character_from_json(const Json& j, const FinAbGroup& group);

}  // namespace periodlab
