#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "critval/models/family.hpp"
#include "critval/models/piece.hpp"
#include "critval/models/section.hpp"

namespace critval::models {

using Edge = std::pair<std::size_t, std::size_t>;

// Symbolic sublevel set: glued pieces with derived adjacency.
struct PieceComplex {
  FamilyId family = FamilyId::Squeeze;
  double level = 0.0;
  std::vector<Piece> pieces;
  std::vector<Edge> adjacency;  // i < j, sorted, no duplicates
  // Graph of a section over the whole set whose vertical slices are
  // intervals; certifies contractibility when present.
  std::optional<SectionSpec> section;

  bool empty() const { return pieces.empty(); }
  // Component label per piece, labels numbered by first occurrence.
  std::vector<std::size_t> components() const;
  std::size_t component_count() const;
  // Planar piece containing p.
  std::optional<std::size_t> locate(Point2 p) const;
  std::optional<std::size_t> stack_piece() const;
};

// Adjacency from the gluing rules:
//  - pieces sharing a closed abscissa are adjacent iff their slices there meet;
//  - an open x-end of P at abscissa c is glued to a piece Q containing c iff
//    P's tag there is CONVERGES(p) with p in Q; OSCILLATES never glues;
//  - a STACK piece is glued to the planar pieces containing its anchor.
// Throws InconsistencyError if two planar pieces overlap on an x-interval of
// positive length.
std::vector<Edge> derive_adjacency(const std::vector<Piece>& pieces);

// k = 0: number of components; k = 1: cycle rank of the adjacency graph plus
// the genus tags. Degrees other than 0 and 1 are InvalidArgument.
int betti(const PieceComplex& model, int k);

}  // namespace critval::models
