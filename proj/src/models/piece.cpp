#include "critval/models/piece.hpp"

#include <algorithm>
#include <utility>

#include "critval/errors.hpp"
#include "critval/fields/curve.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"

namespace critval::models {

namespace {

Bound bound(double v) { return {v, std::isfinite(v)}; }

Span closed_interval(double lo, double hi) { return {bound(lo), bound(hi)}; }

// Largest double in [lo, hi) satisfying pred, for pred(lo) true and pred
// true-then-false on [lo, hi].
template <class Pred>
double last_true(double lo, double hi, Pred pred) {
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return lo;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
}

// Disc-slice contribution of the box [u0, u1] x [v0, v1] at abscissa x.
void add_box(double x, double a, double u0, double u1, double v0, double v1, Interval& acc) {
  const double du = x - std::clamp(x, u0, u1);
  if (std::fabs(du) > a) return;
  const double r = std::sqrt(a * a - du * du);
  acc.lo = std::min(acc.lo, v0 - r);
  acc.hi = std::max(acc.hi, v1 + r);
}

}  // namespace

bool Span::meets(const Span& o) const {
  Bound l = lo;
  if (o.lo.value > l.value || (o.lo.value == l.value && !o.lo.closed)) l = o.lo;
  Bound h = hi;
  if (o.hi.value < h.value || (o.hi.value == h.value && !o.hi.closed)) h = o.hi;
  if (l.value < h.value) return true;
  return l.value == h.value && l.closed && h.closed;
}

LimitTag LimitTag::oscillates(double lower, double upper) {
  if (!(lower < upper)) throw InvalidArgument("LimitTag::oscillates: need lower < upper");
  return {Kind::Oscillates, {}, lower, upper};
}

std::string to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::Tube:
      return "TUBE";
    case PieceKind::VSeg:
      return "VSEG";
    case PieceKind::Rect:
      return "RECT";
    case PieceKind::Stack:
      return "STACK";
  }
  return "?";
}

std::string to_string(Profile profile) {
  switch (profile) {
    case Profile::SineCurve:
      return "sine_curve";
    case Profile::FWidth:
      return "f_width";
    case Profile::GWidth:
      return "g_width";
    case Profile::HSlice:
      return "h_slice";
    case Profile::DistSlice:
      return "dist_slice";
  }
  return "?";
}

std::optional<Interval> h_slice(double x, double a) {
  if (x == 0.0) throw InvalidArgument("h_slice: x = 0 has no sine centre");
  if (fields::mu(x) > a) return std::nullopt;
  const double s = fields::sine_curve(x);
  if (a <= 0.0) {
    // h = g on |y| <= 2, which contains every slice at non-positive levels.
    const auto w = fields::g_half_width(x, a);
    if (!w) return std::nullopt;
    return Interval{s - *w, s + *w};
  }
  const double reach = fields::tau(a + fields::kExpNeg16) + 1.0;
  const auto inside = [&](double y) { return fields::smooth_h(x, y) <= a; };
  return Interval{-last_true(-s, reach, [&](double t) { return inside(-t); }), last_true(s, reach, inside)};
}

std::optional<Interval> dist_slice(double x, double a) {
  if (!(a > 0.0)) throw InvalidArgument("dist_slice: level must be positive");
  const fields::CurveApprox& curve = fields::CurveApprox::standard();
  Interval acc{kInf, -kInf};
  add_box(x, a, -2.0, 0.0, -1.0, 1.0, acc);
  add_box(x, a, 0.0, curve.x_min(), -1.0, 1.0, acc);
  const auto vertices = curve.vertices_between(x - a, x + a);
  constexpr std::size_t kBlock = 1024;
  for (std::size_t first = 0; first < vertices.size(); first += kBlock) {
    const std::size_t last = std::min(first + kBlock, vertices.size());
    // |y| <= 1 on the curve, so a block adds nothing once acc covers the
    // widest disc slice any of its vertices could produce.
    const double du_min = x - std::clamp(x, vertices[first].x, vertices[last - 1].x);
    const double r_max = std::sqrt(std::max(a * a - du_min * du_min, 0.0));
    if (acc.lo <= -1.0 - r_max && acc.hi >= 1.0 + r_max) continue;
    for (std::size_t i = first; i < last; ++i) {
      const double du = vertices[i].x - x;
      if (std::fabs(du) > a) continue;
      const double r = std::sqrt(a * a - du * du);
      acc.lo = std::min(acc.lo, vertices[i].y - r);
      acc.hi = std::max(acc.hi, vertices[i].y + r);
    }
  }
  if (acc.empty()) return std::nullopt;
  return acc;
}

std::optional<Span> Piece::slice(double t) const {
  if (kind == PieceKind::Stack || !x.contains(t)) return std::nullopt;
  if (kind != PieceKind::Tube) return y;
  switch (profile) {
    case Profile::SineCurve: {
      const double s = fields::sine_curve(t);
      return Span::point(s);
    }
    case Profile::FWidth: {
      const double s = fields::sine_curve(t);
      const double w = fields::f_half_width(t, level);
      return closed_interval(s - w, s + w);
    }
    case Profile::GWidth: {
      const auto w = fields::g_half_width(t, level);
      if (!w) return std::nullopt;
      const double s = fields::sine_curve(t);
      return closed_interval(s - *w, s + *w);
    }
    case Profile::HSlice: {
      const auto iv = h_slice(t, level);
      if (!iv) return std::nullopt;
      return closed_interval(iv->lo, iv->hi);
    }
    case Profile::DistSlice: {
      const auto iv = dist_slice(t, level);
      if (!iv) return std::nullopt;
      return closed_interval(iv->lo, iv->hi);
    }
  }
  return std::nullopt;
}

bool Piece::contains(Point2 p) const {
  const auto s = slice(p.x);
  return s && s->contains(p.y);
}

Piece make_vseg(double x, Span y, std::string label) {
  Piece p;
  p.kind = PieceKind::VSeg;
  p.x = Span::point(x);
  p.y = y;
  p.anchor = {x, y.contains(0.0) ? 0.0 : 0.5 * (y.lo.value + y.hi.value)};
  p.label = std::move(label);
  return p;
}

Piece make_rect(Span x, Span y, std::string label) {
  Piece p;
  p.kind = PieceKind::Rect;
  p.x = x;
  p.y = y;
  p.anchor = {0.5 * (x.lo.value + x.hi.value), 0.5 * (y.lo.value + y.hi.value)};
  p.label = std::move(label);
  return p;
}

Piece make_tube(Span x, Profile profile, double level, LimitTag left, LimitTag right, Point2 anchor,
                std::string label) {
  Piece p;
  p.kind = PieceKind::Tube;
  p.x = x;
  p.profile = profile;
  p.level = level;
  p.left = left;
  p.right = right;
  p.anchor = anchor;
  p.label = std::move(label);
  return p;
}

Piece make_stack(Interval heights, Point2 attach, std::string label) {
  Piece p;
  p.kind = PieceKind::Stack;
  p.heights = heights;
  p.anchor = attach;
  p.label = std::move(label);
  return p;
}

}  // namespace critval::models
