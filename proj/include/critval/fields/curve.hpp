#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "critval/fields/geometry.hpp"

namespace critval::fields {

// Polyline through points of the graph y = sin(pi/x), x in [x_min, 1],
// sorted by increasing x. Consecutive vertices are at most max_gap apart.
// The truncated tail {x < x_min} of the topologist's sine curve is covered by
// the box [0, x_min] x [-1, 1].
class CurveApprox {
 public:
  CurveApprox(double x_min, double max_gap);

  // x_min = max_gap = 1e-3; built once, shared, immutable.
  static const CurveApprox& standard();

  double x_min() const { return x_min_; }
  double max_gap() const { return max_gap_; }
  std::span<const Point2> vertices() const { return vertices_; }
  // Vertices with lo <= x <= hi.
  std::span<const Point2> vertices_between(double lo, double hi) const;

  // min(upper, distance to the polyline), accurate to within `slack`.
  double polyline_distance(Point2 p, double slack = 1e-7,
                           double upper = std::numeric_limits<double>::infinity()) const;

  // Distance to L = K u [-2,0]x[-1,1] for a point outside the square, with
  // error at most 2 * max_gap.
  double distance_to_set(Point2 p) const;

 private:
  struct Node {
    Box box;
    std::uint32_t first;  // segment range [first, last)
    std::uint32_t last;
    std::int32_t left = -1;
    std::int32_t right = -1;
  };

  std::int32_t build(std::uint32_t first, std::uint32_t last);

  double x_min_;
  double max_gap_;
  std::vector<Point2> vertices_;
  std::vector<Node> nodes_;
};

}  // namespace critval::fields
