#pragma once

#include "critval/models/family.hpp"
#include "critval/models/piece_complex.hpp"

namespace critval::models {

enum class Openness { ClosedToClosed, OpenToOpen };

// Rank of H_k(sublevel at a) -> H_k(sublevel at b) induced by inclusion, for
// a <= b. Open sublevel sets {f < t} are evaluated at t - delta with delta
// below the gap to the nearest special level under t, where the homotopy type
// is that of the union over s < t.
// k = 1 is answered through the rank bound min(b1(a), b1(b)) when that bound
// is 0 (every registered model), and is UnsupportedLevel otherwise.
int induced_rank(FamilyId family, int k, double a, double b, Openness openness = Openness::ClosedToClosed);

// Same on prebuilt closed models, a = from.level <= b = to.level.
int induced_rank(const PieceComplex& from, const PieceComplex& to, int k);

// delta such that the open sublevel sets at a and b have the homotopy type of
// the closed ones at a - delta and b - delta; shared so the pair stays ordered.
double open_level_shift(FamilyId family, double a, double b);

}  // namespace critval::models
