#pragma once

#include "periodlab/casestudy.hpp"
#include "periodlab/oracles.hpp"

namespace fixtures {

using namespace periodlab;
using namespace periodlab::oracles;

inline WeilModel dihedral32() { return dihedral32_model(); }

}  // namespace fixtures
