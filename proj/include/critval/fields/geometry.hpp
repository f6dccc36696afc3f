#pragma once

#include <algorithm>
#include <cmath>

namespace critval {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Closed interval [lo, hi]; empty when lo > hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
  bool contains(double t) const { return lo <= t && t <= hi; }
  double length() const { return empty() ? 0.0 : hi - lo; }
  bool overlaps(const Interval& o) const { return !empty() && !o.empty() && lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Axis-aligned box, used for the curve distance hierarchy.
struct Box {
  double x0, y0, x1, y1;

  double distance(Point2 p) const {
    const double dx = std::max({x0 - p.x, 0.0, p.x - x1});
    const double dy = std::max({y0 - p.y, 0.0, p.y - y1});
    return std::hypot(dx, dy);
  }
};

}  // namespace critval
