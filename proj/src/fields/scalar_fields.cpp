#include "critval/fields/scalar_fields.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "critval/errors.hpp"
#include "critval/fields/curve.hpp"
#include "critval/fields/trig.hpp"

namespace critval::fields {

namespace {

constexpr std::array<std::string_view, 6> kFieldNames = {"BUMP",     "SMOOTH_F",    "SMOOTH_G",
                                                         "SMOOTH_H", "SIGNED_DIST", "SPHERE_H"};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite input");
}

double height_term(double t) { return t * t * bump(t * t - 4.0); }

double bulge_term(double x) { return bump(0.25 - (x - 1.0) * (x - 1.0)); }

bool in_square(Point2 p) { return -2.0 <= p.x && p.x <= 0.0 && -1.0 <= p.y && p.y <= 1.0; }

}  // namespace

std::string_view to_string(FieldId id) { return kFieldNames[static_cast<std::size_t>(id)]; }

FieldId parse_field(std::string_view name) {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i)
    if (kFieldNames[i] == name) return static_cast<FieldId>(i);
  throw InvalidArgument("unknown field: " + std::string(name));
}

std::size_t arity(FieldId id) {
  switch (id) {
    case FieldId::Bump:
      return 1;
    case FieldId::SphereH:
      return 3;
    default:
      return 2;
  }
}

double bump(double x) {
  require_finite(x, "bump");
  if (x <= 0.0) return 0.0;
  return std::exp(-1.0 / (x * x));
}

double smooth_f(double x, double y) {
  if (x == 0.0) return 0.0;
  const double d = y - sine_curve(x);
  return bump(std::fabs(x)) * d * d;
}

double smooth_g(double x, double y) { return smooth_f(x, y) - bulge_term(x) + height_term(x); }

double smooth_h(double x, double y) { return smooth_g(x, y) + height_term(y); }

double signed_distance(double x, double y) {
  const Point2 p{x, y};
  if (in_square(p)) return -std::min({x + 2.0, -x, y + 1.0, 1.0 - y});
  return CurveApprox::standard().distance_to_set(p);
}

double sphere_h(Vec3 w) {
  const double norm = std::sqrt(w.x * w.x + w.y * w.y + w.z * w.z);
  if (!(std::fabs(norm - 1.0) <= 1e-9)) throw InvalidArgument("SPHERE_H: point is not on the unit sphere");
  if (w.x == 0.0 && w.y == 0.0 && w.z > 0.0) return 1.0;
  const double eta = sphere_eta(w);
  if (eta == 0.0) return 1.0;
  const Point2 p = stereographic(w);
  return smooth_h(p.x, p.y) * eta + (1.0 - eta);
}

double eval(FieldId id, std::span<const double> point) {
  if (point.size() != arity(id))
    throw InvalidArgument(std::string(to_string(id)) + ": expected " + std::to_string(arity(id)) +
                          " coordinates, got " + std::to_string(point.size()));
  for (double c : point) require_finite(c, "eval");
  switch (id) {
    case FieldId::Bump:
      return bump(point[0]);
    case FieldId::SmoothF:
      return smooth_f(point[0], point[1]);
    case FieldId::SmoothG:
      return smooth_g(point[0], point[1]);
    case FieldId::SmoothH:
      return smooth_h(point[0], point[1]);
    case FieldId::SignedDist:
      return signed_distance(point[0], point[1]);
    case FieldId::SphereH:
      return sphere_h({point[0], point[1], point[2]});
  }
  throw InvalidArgument("eval: bad field id");
}

double tau(double a) {
  require_finite(a, "tau");
  if (a < 0.0) throw InvalidArgument("tau: level must be non-negative");
  double lo = 2.0;
  if (a == 0.0) return lo;
  double hi = 2.0 + std::sqrt(a) + 4.0;
  while (height_term(hi) <= a) hi *= 2.0;
  // Bisect down to adjacent doubles; lo always satisfies the constraint.
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (height_term(mid) <= a)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double sigma_from_log_magnitude(double magnitude) {
  if (std::isnan(magnitude) || magnitude < 16.0)
    throw DomainError("sigma: level outside [-e^-16, 0)");
  if (std::isinf(magnitude)) return 0.5;
  const double excess = magnitude - 16.0;
  const double root = std::sqrt(magnitude);
  // 1/4 - 1/sqrt(L) rewritten to stay accurate when L is close to 16.
  return std::sqrt(excess / (4.0 * root * (root + 4.0)));
}

double sigma(double a) {
  if (!(a >= -kExpNeg16 && a < 0.0)) throw DomainError("sigma: level outside [-e^-16, 0)");
  if (a == -kExpNeg16) return 0.0;
  const double excess = -std::log(-a / kExpNeg16);
  const double magnitude = 16.0 + excess;
  const double root = std::sqrt(magnitude);
  return std::sqrt(excess / (4.0 * root * (root + 4.0)));
}

double mu(double x) {
  require_finite(x, "mu");
  return -bulge_term(x) + height_term(x);
}

double g_radicand(double x, double a) { return a + bulge_term(x) - height_term(x); }

double f_half_width(double x, double a) {
  if (!(a > 0.0)) throw InvalidArgument("f_half_width: level must be positive");
  return std::sqrt(a) * std::exp(1.0 / (2.0 * x * x));
}

std::optional<double> g_half_width(double x, double a) {
  const double r = g_radicand(x, a);
  if (r < 0.0) return std::nullopt;
  if (r == 0.0) return 0.0;
  return std::exp(1.0 / (2.0 * x * x)) * std::sqrt(r);
}

namespace {

bool g_member_by_width(Point2 p, double a) {
  const auto w = g_half_width(p.x, a);
  if (!w) return false;
  const double d = std::fabs(p.y - sine_curve(p.x));
  if (*w == 0.0) return d == 0.0;
  return d <= *w;
}

bool smooth_g_member(Point2 p, double a, double x_cut) {
  if (a < -kExpNeg16) return false;
  if (p.x == 0.0) return a >= 0.0;  // g(0, y) = 0
  if (a <= 0.0 || std::fabs(p.x) >= x_cut) return g_member_by_width(p, a);
  return smooth_g(p.x, p.y) <= a;
}

bool smooth_h_member(Point2 p, double a, double x_cut) {
  if (a < -kExpNeg16) return false;
  if (a <= 0.0) {
    // h = g on |y| <= 2 and h > 0 elsewhere.
    if (std::fabs(p.y) > 2.0) return false;
    return smooth_g_member(p, a, x_cut);
  }
  if (p.x == 0.0) return height_term(p.y) <= a;
  return smooth_h(p.x, p.y) <= a;
}

}  // namespace

bool in_sublevel(FieldId id, Point2 p, double a, MembershipOptions opts) {
  require_finite(a, "in_sublevel");
  switch (id) {
    case FieldId::SmoothF: {
      if (a < 0.0) return false;
      if (p.x == 0.0) return true;
      if (a == 0.0) return p.y == sine_curve(p.x);
      if (std::fabs(p.x) >= opts.x_cut) return std::fabs(p.y - sine_curve(p.x)) <= f_half_width(p.x, a);
      return smooth_f(p.x, p.y) <= a;
    }
    case FieldId::SmoothG:
      return smooth_g_member(p, a, opts.x_cut);
    case FieldId::SmoothH:
      return smooth_h_member(p, a, opts.x_cut);
    case FieldId::SignedDist: {
      if (a == 0.0) return in_square(p) || (p.x > 0.0 && p.x <= 1.0 && p.y == sine_curve(p.x));
      return signed_distance(p.x, p.y) <= a;
    }
    case FieldId::SphereH: {
      const SphereCutoff& cut = sphere_cutoff();
      if (std::hypot(p.x, p.y) <= cut.inner) return smooth_h_member(p, a, opts.x_cut);
      return sphere_h(inverse_stereographic(p)) <= a;
    }
    case FieldId::Bump:
      break;
  }
  throw InvalidArgument("in_sublevel: field has no planar sublevel sets");
}

Point2 stereographic(Vec3 w) {
  const double denom = 1.0 - w.z;
  return {w.x / denom, w.y / denom};
}

Vec3 inverse_stereographic(Point2 p) {
  const double r2 = p.x * p.x + p.y * p.y;
  const double denom = 1.0 + r2;
  return {2.0 * p.x / denom, 2.0 * p.y / denom, (r2 - 1.0) / denom};
}

const SphereCutoff& sphere_cutoff() {
  static const SphereCutoff cutoff = [] {
    SphereCutoff c;
    // {h <= 1} lies in |x|, |y| <= tau(1 + e^-16).
    c.inner = std::sqrt(2.0) * tau(1.0 + kExpNeg16) + 1.0;
    c.outer = 2.0 * c.inner;
    c.chord_inner = 2.0 / std::sqrt(1.0 + c.inner * c.inner);
    c.chord_outer = 2.0 / std::sqrt(1.0 + c.outer * c.outer);
    return c;
  }();
  return cutoff;
}

double sphere_eta(Vec3 w) {
  const SphereCutoff& c = sphere_cutoff();
  const double r = std::sqrt(w.x * w.x + w.y * w.y + (w.z - 1.0) * (w.z - 1.0));
  const double t = (r - c.chord_outer) / (c.chord_inner - c.chord_outer);
  const double up = bump(t);
  const double down = bump(1.0 - t);
  return up / (up + down);
}

}  // namespace critval::fields
