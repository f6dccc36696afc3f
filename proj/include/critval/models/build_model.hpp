#pragma once

#include "critval/models/family.hpp"
#include "critval/models/piece_complex.hpp"

namespace critval::models {

// Exact symbolic sublevel set of `family` at level a. Levels below the
// family's minimum give the empty complex. Levels at or above level_sup
// raise UnsupportedLevel; non-finite levels raise InvalidArgument.
PieceComplex build_model(FamilyId family, double a);

}  // namespace critval::models
