#include "critval/models/induced_rank.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "critval/errors.hpp"
#include "critval/models/build_model.hpp"

namespace critval::models {

namespace {

// Piece of `to` receiving piece p of `from` under inclusion.
std::size_t image_piece(const PieceComplex& from, const Piece& p, const PieceComplex& to) {
  if (family_info(to.family).stacked && from.level < to.level) {
    // Every piece below the top height sits inside the lower levels.
    if (const auto s = to.stack_piece()) return *s;
  }
  if (p.kind == PieceKind::Stack) {
    if (const auto s = to.stack_piece()) return *s;
    throw InconsistencyError("induced_rank: STACK piece has no image");
  }
  if (const auto q = to.locate(p.anchor)) return *q;
  throw InconsistencyError("induced_rank: anchor of " + p.label + " not contained in the level " +
                           std::to_string(to.level) + " model");
}

}  // namespace

int induced_rank(const PieceComplex& from, const PieceComplex& to, int k) {
  if (from.family != to.family) throw InvalidArgument("induced_rank: models of different families");
  if (from.level > to.level) throw InvalidArgument("induced_rank: need a <= b");
  if (k != 0 && k != 1) throw InvalidArgument("induced_rank: degree must be 0 or 1");
  if (from.empty() || to.empty()) return 0;
  if (k == 1) {
    const int bound = std::min(betti(from, 1), betti(to, 1));
    if (bound == 0) return 0;
    throw UnsupportedLevel("induced_rank: degree 1 maps between non-trivial cycle spaces are not modelled");
  }
  if (from.level == to.level) return static_cast<int>(from.component_count());
  const auto to_label = to.components();
  std::set<std::size_t> hit;
  for (const Piece& p : from.pieces) hit.insert(to_label[image_piece(from, p, to)]);
  return static_cast<int>(hit.size());
}

double open_level_shift(FamilyId family, double a, double b) {
  double delta = 1.0;
  for (double t : {a, b}) {
    for (double s : family_info(family).special_levels)
      if (s < t) delta = std::min(delta, t - s);
  }
  if (a < b) delta = std::min(delta, b - a);
  return 0.5 * delta;
}

int induced_rank(FamilyId family, int k, double a, double b, Openness openness) {
  if (!(a <= b)) throw InvalidArgument("induced_rank: need a <= b");
  if (openness == Openness::OpenToOpen) {
    const double delta = open_level_shift(family, a, b);
    a -= delta;
    b -= delta;
  }
  return induced_rank(build_model(family, a), build_model(family, b), k);
}

}  // namespace critval::models
