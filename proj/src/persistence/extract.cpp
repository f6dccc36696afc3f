#include "critval/persistence/extract.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critval/errors.hpp"
#include "critval/models/build_model.hpp"
#include "critval/models/induced_rank.hpp"

namespace critval::persistence {

namespace {

using models::FamilyId;
using models::PieceComplex;

struct Position {
  bool special = false;
  double lo = -kInf;  // gap bounds, or lo == hi == the special level
  double hi = kInf;
  std::vector<double> samples;
};

std::vector<Position> positions(FamilyId family, const SamplingPlan& plan) {
  const models::FamilyInfo& info = models::family_info(family);
  if (plan.per_gap < 1) throw InvalidArgument("extract_barcode: per_gap must be positive");
  for (double l : plan.levels)
    if (!std::isfinite(l) || l >= info.level_sup)
      throw InvalidArgument("extract_barcode: plan level outside the modelled range");
  std::vector<Position> out;
  const auto& specials = info.special_levels;
  const int n = plan.per_gap;
  for (std::size_t i = 0; i <= specials.size(); ++i) {
    Position gap;
    gap.lo = i == 0 ? -kInf : specials[i - 1];
    gap.hi = i == specials.size() ? info.level_sup : specials[i];
    for (int s = 1; s <= n; ++s) {
      if (std::isinf(gap.lo))
        gap.samples.push_back(gap.hi - static_cast<double>(s));
      else if (std::isinf(gap.hi))
        gap.samples.push_back(gap.lo + static_cast<double>(s));
      else
        gap.samples.push_back(gap.lo + (gap.hi - gap.lo) * s / (n + 1));
    }
    for (double l : plan.levels)
      if (gap.lo < l && l < gap.hi) gap.samples.push_back(l);
    std::sort(gap.samples.begin(), gap.samples.end());
    gap.samples.erase(std::unique(gap.samples.begin(), gap.samples.end()), gap.samples.end());
    out.push_back(gap);
    if (i < specials.size()) out.push_back({true, specials[i], specials[i], {specials[i]}});
  }
  return out;
}

std::string level_text(double a) { return std::to_string(a); }

}  // namespace

std::vector<double> sample_levels(FamilyId family, const SamplingPlan& plan) {
  std::vector<double> out;
  for (const Position& p : positions(family, plan)) out.insert(out.end(), p.samples.begin(), p.samples.end());
  return out;
}

Barcode extract_barcode(FamilyId family, int k, const SamplingPlan& plan) {
  if (k < 0) throw InvalidArgument("extract_barcode: negative degree");
  const std::vector<Position> pos = positions(family, plan);
  const std::size_t m = pos.size();

  // Gap consistency: every sampled inclusion inside a gap is an isomorphism.
  std::vector<PieceComplex> rep;
  for (const Position& p : pos) {
    std::vector<PieceComplex> models;
    for (double t : p.samples) models.push_back(models::build_model(family, t));
    for (std::size_t s = 0; s + 1 < models.size(); ++s) {
      const int r = models::induced_rank(models[s], models[s + 1], k);
      const int d0 = models::induced_rank(models[s], models[s], k);
      const int d1 = models::induced_rank(models[s + 1], models[s + 1], k);
      if (r != d0 || r != d1)
        throw InconsistencyError("extract_barcode: ranks vary inside the gap between " + level_text(p.lo) +
                                 " and " + level_text(p.hi));
    }
    rep.push_back(std::move(models[models.size() / 2]));
  }

  std::vector<std::vector<int>> r(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) r[i][j] = models::induced_rank(rep[i], rep[j], k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (r[i][j] > std::min(r[i][i], r[j][j]))
        throw InconsistencyError("extract_barcode: rank sandwich violated");

  const auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    if (i < 0 || j >= static_cast<std::ptrdiff_t>(m)) return 0;
    return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  Barcode bc;
  bc.label = std::string(models::to_string(family)) + "/H" + std::to_string(k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto si = static_cast<std::ptrdiff_t>(i);
      const auto sj = static_cast<std::ptrdiff_t>(j);
      const int mult = at(si, sj) - at(si - 1, sj) - at(si, sj + 1) + at(si - 1, sj + 1);
      if (mult < 0) throw InconsistencyError("extract_barcode: negative bar multiplicity");
      DecoratedBar bar;
      bar.degree = k;
      bar.birth = pos[i].lo;
      bar.birth_closed = pos[i].special;
      bar.death = pos[j].special ? pos[j].hi : (j + 1 == m ? kInf : pos[j].hi);
      bar.death_closed = pos[j].special;
      validate(bar);
      for (int c = 0; c < mult; ++c) bc.bars.push_back(bar);
    }
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (rank(bc, k, rep[i].level, rep[j].level) != r[i][j])
        throw InconsistencyError("extract_barcode: barcode does not reproduce the sampled ranks");
  return bc;
}

}  // namespace critval::persistence
