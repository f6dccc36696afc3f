#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "critval/fields/geometry.hpp"

namespace critval::models {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bound {
  double value = 0.0;
  bool closed = true;

  friend bool operator==(const Bound&, const Bound&) = default;
};

// Real interval with per-endpoint decorations. Infinite endpoints are open.
struct Span {
  Bound lo;
  Bound hi;

  static Span closed(double lo, double hi) { return {{lo, true}, {hi, true}}; }
  static Span open(double lo, double hi) { return {{lo, false}, {hi, false}}; }
  static Span point(double c) { return closed(c, c); }
  static Span whole() { return open(-kInf, kInf); }

  bool contains(double t) const {
    const bool above = lo.closed ? t >= lo.value : t > lo.value;
    const bool below = hi.closed ? t <= hi.value : t < hi.value;
    return above && below;
  }
  bool degenerate() const { return lo.value == hi.value; }
  // Nonempty intersection of two spans.
  bool meets(const Span& o) const;

  friend bool operator==(const Span&, const Span&) = default;
};

// How a piece behaves as x approaches one of its open x-endpoints.
struct LimitTag {
  enum class Kind { None, Converges, Oscillates };
  Kind kind = Kind::None;
  Point2 point;  // Converges: a limit point reached by a path inside the piece
  double lower = 0.0;  // Oscillates: the cluster set in y is [lower, upper]
  double upper = 0.0;

  static LimitTag none() { return {}; }
  static LimitTag converges(Point2 p) { return {Kind::Converges, p, 0.0, 0.0}; }
  // Requires lower < upper.
  static LimitTag oscillates(double lower, double upper);
};

enum class PieceKind { Tube, VSeg, Rect, Stack };

// Rule producing the vertical slice of a tube at abscissa x.
enum class Profile {
  SineCurve,  // the single point sin(pi/x)
  FWidth,     // |y - sin(pi/x)| <= sqrt(a) e^{1/(2x^2)}
  GWidth,     // |y - sin(pi/x)| <= e^{1/(2x^2)} sqrt(g_radicand(x, a))
  HSlice,     // {y : h(x, y) <= a}, computed by bisection around sin(pi/x)
  DistSlice,  // {y : d((x, y), L) <= a}, union of disc slices over L
};

std::string to_string(PieceKind kind);
std::string to_string(Profile profile);

// One glued piece of a symbolic sublevel set. Pieces of one complex have
// pairwise disjoint x-span interiors; STACK pieces have no planar extent.
struct Piece {
  PieceKind kind = PieceKind::VSeg;
  Span x;  // VSEG: a single abscissa
  Span y;  // VSEG and RECT
  Profile profile = Profile::SineCurve;
  double level = 0.0;  // TUBE profile parameter
  LimitTag left;       // at x.lo when it is open
  LimitTag right;      // at x.hi when it is open
  Point2 anchor;       // a point of the piece (STACK: its attaching point)
  Interval heights{0.0, 0.0};  // STACK only
  int genus = 0;
  std::string label;

  // Vertical slice at abscissa x, as a y-span; nullopt when x is outside the
  // piece or the slice is empty. STACK pieces have no slices.
  std::optional<Span> slice(double x) const;
  bool contains(Point2 p) const;
};

Piece make_vseg(double x, Span y, std::string label);
Piece make_rect(Span x, Span y, std::string label);
Piece make_tube(Span x, Profile profile, double level, LimitTag left, LimitTag right, Point2 anchor,
                std::string label);
Piece make_stack(Interval heights, Point2 attach, std::string label);

// Vertical slice of the sublevel set {h <= a} at x != 0, or nullopt.
std::optional<Interval> h_slice(double x, double a);
// Vertical slice of {d(., L) <= a} for a > 0, via the union of disc slices
// over L cap ([x - a, x + a] x R) with L approximated by the standard curve.
std::optional<Interval> dist_slice(double x, double a);

}  // namespace critval::models
