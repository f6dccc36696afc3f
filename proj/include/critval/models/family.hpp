#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "critval/fields/scalar_fields.hpp"

namespace critval::models {

enum class FamilyId { Squeeze, StackedSine, SignedDist, SmoothF, SmoothG, SmoothH, SphereH };

std::string_view to_string(FamilyId id);
// Accepts SQUEEZE, STACKED_SINE, SIGNED_DIST, SMOOTH_F, SMOOTH_G, SMOOTH_H, SPHERE_H.
FamilyId parse_family(std::string_view name);
std::span<const FamilyId> all_families();

struct FamilyInfo {
  FamilyId id;
  // Planar scalar field whose sublevel sets the family describes, if any.
  std::optional<fields::FieldId> field;
  // Sublevel sets are empty below min_value and nonempty from it on.
  double min_value;
  // Levels where the homotopy type of the sublevel set changes; sorted.
  std::span<const double> special_levels;
  // Levels a >= level_sup are not modelled.
  double level_sup = std::numeric_limits<double>::infinity();
  // Sublevel sets are 2-d slices of a stack of planar level sets.
  bool stacked = false;
  // Half-width tube description away from x = 0 (SMOOTH_F/G/H).
  bool tube_family = false;
  // Some closed interval free of symmetric critical values maps non-isomorphically.
  bool counterexample = true;
};

const FamilyInfo& family_info(FamilyId id);

}  // namespace critval::models
