#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "critval/fields/geometry.hpp"
#include "critval/models/family.hpp"

namespace critval::models {

struct GridSpec {
  double dx = 0.005;
  Interval x_range{-8.0, 8.0};
  Interval y_window{-6.0, 6.0};
  double x_cut = 0.05;
};

struct Column {
  double x = 0.0;
  std::vector<Interval> cells;  // disjoint, sorted, closed
  bool symbolic = false;        // stands in for every abscissa with |x| < x_cut
};

// Numeric sublevel set on an x-grid. Consecutive ordinary columns are joined
// by y-overlap of their cells. A symbolic column is joined to the cells of its
// two neighbours according to the limit rule recorded in glue_symbolic.
struct ColumnComplex {
  FamilyId family = FamilyId::SmoothG;
  double level = 0.0;
  std::vector<Column> columns;  // strictly increasing x
  // Limit rule at the symbolic column: true when the tube sides converge to
  // a point of the symbolic segment, false when they oscillate.
  bool glue_symbolic = false;

  std::size_t cell_count() const;
  // Validates sortedness and disjointness; throws InconsistencyError.
  void check() const;
};

// Grid model of a tube family (SMOOTH_F/G/H, a > 0) or SIGNED_DIST (a != 0).
// Cells come from the closed-form half-widths (F, G), bisected slices (H) or
// the disc-slice union (SIGNED_DIST), clipped to the y-window. Columns with
// 0 < |x| < x_cut are replaced by one symbolic column at x = 0.
// UnsupportedLevel for other families and for a <= 0 on tube families.
ColumnComplex column_complex(FamilyId family, double a, const GridSpec& grid = {});

struct GridEdge {
  std::size_t a;
  std::size_t b;
};

// Cells in column order and their adjacency; cell ids index the flattened list.
std::vector<GridEdge> grid_adjacency(const ColumnComplex& cc);

// k = 0: union-find components of the cell graph; k = 1: its cycle rank.
int betti_grid(const ColumnComplex& cc, int k);

}  // namespace critval::models
