#include "critval/models/family.hpp"

#include <array>
#include <string>

#include "critval/errors.hpp"

namespace critval::models {

namespace {

using fields::FieldId;
using fields::kExpNeg16;

constexpr std::array<std::string_view, 7> kNames = {"SQUEEZE",  "STACKED_SINE", "SIGNED_DIST", "SMOOTH_F",
                                                    "SMOOTH_G", "SMOOTH_H",     "SPHERE_H"};
constexpr std::array<FamilyId, 7> kAll = {FamilyId::Squeeze,  FamilyId::StackedSine, FamilyId::SignedDist,
                                          FamilyId::SmoothF,  FamilyId::SmoothG,     FamilyId::SmoothH,
                                          FamilyId::SphereH};

constexpr std::array<double, 2> kMinusOneZero = {-1.0, 0.0};
constexpr std::array<double, 1> kZero = {0.0};
constexpr std::array<double, 2> kBulgeZero = {-kExpNeg16, 0.0};

const std::array<FamilyInfo, 7> kRegistry = {{
    {FamilyId::Squeeze, std::nullopt, -1.0, kMinusOneZero},
    {FamilyId::StackedSine, std::nullopt, -1.0, kMinusOneZero, std::numeric_limits<double>::infinity(), true},
    {FamilyId::SignedDist, FieldId::SignedDist, -1.0, kMinusOneZero},
    {FamilyId::SmoothF, FieldId::SmoothF, 0.0, kZero, std::numeric_limits<double>::infinity(), false, true, false},
    {FamilyId::SmoothG, FieldId::SmoothG, -kExpNeg16, kBulgeZero, std::numeric_limits<double>::infinity(), false,
     true},
    {FamilyId::SmoothH, FieldId::SmoothH, -kExpNeg16, kBulgeZero, std::numeric_limits<double>::infinity(), false,
     true},
    {FamilyId::SphereH, FieldId::SphereH, -kExpNeg16, kBulgeZero, 1.0},
}};

}  // namespace

std::string_view to_string(FamilyId id) { return kNames[static_cast<std::size_t>(id)]; }

FamilyId parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<FamilyId>(i);
  throw InvalidArgument("unknown family: " + std::string(name));
}

std::span<const FamilyId> all_families() { return kAll; }

const FamilyInfo& family_info(FamilyId id) { return kRegistry[static_cast<std::size_t>(id)]; }

}  // namespace critval::models
