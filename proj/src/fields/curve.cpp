#include "critval/fields/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "critval/errors.hpp"
#include "critval/fields/trig.hpp"

namespace critval::fields {

namespace {

constexpr std::uint32_t kLeafSegments = 16;

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

}  // namespace

CurveApprox::CurveApprox(double x_min, double max_gap) : x_min_(x_min), max_gap_(max_gap) {
  if (!(x_min > 0.0 && x_min < 1.0) || !(max_gap > 0.0))
    throw InvalidArgument("CurveApprox: need 0 < x_min < 1 and max_gap > 0");
  // Step in x bounded by max_gap / sqrt(1 + slope_max^2) with |slope| <= pi/x^2,
  // so every chord is shorter than max_gap.
  std::vector<Point2> reversed;
  double x = 1.0;
  while (x > x_min) {
    reversed.push_back({x, sine_curve(x)});
    const auto step_at = [&](double t) {
      const double slope = std::numbers::pi / (t * t);
      return max_gap / std::sqrt(1.0 + slope * slope);
    };
    // the slope bound is taken at the far end of the step
    x -= step_at(x - step_at(x));
  }
  reversed.push_back({x_min, sine_curve(x_min)});
  vertices_.assign(reversed.rbegin(), reversed.rend());
  nodes_.reserve(2 * (vertices_.size() / kLeafSegments + 1));
  build(0, static_cast<std::uint32_t>(vertices_.size() - 1));
}

const CurveApprox& CurveApprox::standard() {
  static const CurveApprox curve(1e-3, 1e-3);
  return curve;
}

std::int32_t CurveApprox::build(std::uint32_t first, std::uint32_t last) {
  const auto index = static_cast<std::int32_t>(nodes_.size());
  Box box{vertices_[first].x, vertices_[first].y, vertices_[first].x, vertices_[first].y};
  for (std::uint32_t i = first; i <= last; ++i) {
    box.x0 = std::min(box.x0, vertices_[i].x);
    box.x1 = std::max(box.x1, vertices_[i].x);
    box.y0 = std::min(box.y0, vertices_[i].y);
    box.y1 = std::max(box.y1, vertices_[i].y);
  }
  nodes_.push_back({box, first, last, -1, -1});
  if (last - first > kLeafSegments) {
    const std::uint32_t mid = first + (last - first) / 2;
    const std::int32_t l = build(first, mid);
    const std::int32_t r = build(mid, last);
    nodes_[index].left = l;
    nodes_[index].right = r;
  }
  return index;
}

std::span<const Point2> CurveApprox::vertices_between(double lo, double hi) const {
  auto by_x = [](const Point2& v, double t) { return v.x < t; };
  auto first = std::lower_bound(vertices_.begin(), vertices_.end(), lo, by_x);
  auto last = std::upper_bound(vertices_.begin(), vertices_.end(), hi,
                               [](double t, const Point2& v) { return t < v.x; });
  if (first >= last) return {};
  return {&*first, static_cast<std::size_t>(last - first)};
}

double CurveApprox::polyline_distance(Point2 p, double slack, double upper) const {
  using Entry = std::pair<double, std::int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  double best = upper;
  open.push({nodes_[0].box.distance(p), 0});
  while (!open.empty()) {
    const auto [bound, id] = open.top();
    open.pop();
    if (bound >= best - slack) break;
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.left < 0) {
      for (std::uint32_t i = n.first; i < n.last; ++i)
        best = std::min(best, segment_distance(p, vertices_[i], vertices_[i + 1]));
      continue;
    }
    for (std::int32_t child : {n.left, n.right}) {
      const double d = nodes_[static_cast<std::size_t>(child)].box.distance(p);
      if (d < best - slack) open.push({d, child});
    }
  }
  return best;
}

double CurveApprox::distance_to_set(Point2 p) const {
  const Box square{-2.0, -1.0, 0.0, 1.0};
  const Box tail{0.0, -1.0, x_min_, 1.0};
  double d = std::min(square.distance(p), tail.distance(p));
  if (d == 0.0) return 0.0;
  return polyline_distance(p, 1e-7, d);
}

}  // namespace critval::fields
