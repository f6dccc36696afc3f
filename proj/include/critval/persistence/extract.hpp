#pragma once

#include <vector>

#include "critval/models/family.hpp"
#include "critval/persistence/barcode.hpp"

namespace critval::persistence {

// Extra sample levels, and the number of evenly spaced levels generated in
// each gap between consecutive special levels.
struct SamplingPlan {
  std::vector<double> levels;
  int per_gap = 3;
};

// The degree-k barcode of a registered family, read off the piece models.
// Positions are the special levels and the open gaps between them; the
// multiplicity of the bars spanning positions i..j is
// r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1). A bar ending in a gap ends open at
// the next special level (or at +inf for the top gap); a bar starting in a gap
// starts open at the previous one (or at -inf).
// InconsistencyError if ranks vary inside a gap, break the rank sandwich, give
// negative multiplicities, or are not reproduced by the resulting barcode.
Barcode extract_barcode(models::FamilyId family, int k, const SamplingPlan& plan = {});

// Every plan level and generated gap level, with the special levels, sorted.
std::vector<double> sample_levels(models::FamilyId family, const SamplingPlan& plan = {});

}  // namespace critval::persistence
