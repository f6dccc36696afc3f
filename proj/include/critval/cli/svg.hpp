#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "critval/fields/geometry.hpp"
#include "critval/models/family.hpp"

namespace critval::cli {

struct PlotGrid {
  double dx = 0.005;  // cell side in x and y
  Interval x_range{-8.0, 8.0};
  Interval y_range{-6.0, 6.0};
};

// Filled cells [row_lo, row_hi] of one grid column.
struct CellRun {
  std::size_t row_lo = 0;
  std::size_t row_hi = 0;
};

struct Stroke {
  std::string label;
  std::vector<std::vector<Point2>> polylines;
};

struct ComponentStrokes {
  std::size_t component = 0;
  std::vector<Stroke> strokes;
};

struct BulgeMarker {
  Box box;
  std::size_t component = 0;
};

struct PlotData {
  models::FamilyId family = models::FamilyId::SmoothG;
  double level = 0.0;
  PlotGrid grid;
  std::vector<std::vector<CellRun>> columns;  // one entry per grid column
  std::vector<ComponentStrokes> components;
  std::optional<BulgeMarker> bulge;
  std::vector<std::string> notes;
};

// A cell is filled when the vertical slice of the sublevel set at a sample
// abscissa of its column meets the cell's y-range. Vertical segments are
// sampled at their own abscissa. Strokes follow the piece centrelines and are
// grouped by path component. InvalidArgument for stacked families.
PlotData rasterize(models::FamilyId family, double a, const PlotGrid& grid);

// Self-contained SVG in world coordinates (y up): one path of filled cells,
// one group per component, the bulge marker and any notes.
std::string render_svg(const PlotData& plot);

// Numbers of every path "d" attribute in document order.
std::vector<double> path_numbers(const std::string& svg);

}  // namespace critval::cli
