#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "critval/fields/geometry.hpp"

namespace critval::fields {

enum class FieldId { Bump, SmoothF, SmoothG, SmoothH, SignedDist, SphereH };

std::string_view to_string(FieldId id);
// Accepts the upper-case spellings used on the command line (BUMP, SMOOTH_F, ...).
FieldId parse_field(std::string_view name);
std::size_t arity(FieldId id);

// e^{-16}: the minimum of the smooth fields g and h, attained at (1, 0).
inline constexpr double kExpNeg16 = 1.1253517471925912e-07;

// e^{-1/x^2} for x > 0, exactly 0 for x <= 0.
double bump(double x);

// e^{-1/x^2} (y - sin(pi/x))^2, with the x = 0 clause taken symbolically.
double smooth_f(double x, double y);
// smooth_f - bump(1/4 - (x-1)^2) + x^2 bump(x^2 - 4)
double smooth_g(double x, double y);
// smooth_g + y^2 bump(y^2 - 4)
double smooth_h(double x, double y);
// Signed distance to L = K u [-2,0]x[-1,1], K the topologist's sine curve.
double signed_distance(double x, double y);
// The compactified field on the unit sphere; |w| must be 1 within 1e-9.
double sphere_h(Vec3 w);

double eval(FieldId id, std::span<const double> point);

// Largest x with x^2 bump(x^2 - 4) <= a.
double tau(double a);
// sqrt(1/4 - sqrt(-1/log(-a))) for a in [-e^{-16}, 0); the double kExpNeg16 is
// treated as the exact boundary so that sigma(-kExpNeg16) == 0.
double sigma(double a);
// Same value expressed through magnitude = -log(-a) >= 16. Lets callers reach
// levels such as -e^{-10000} that underflow as doubles.
double sigma_from_log_magnitude(double magnitude);
// Minimum of y -> smooth_h(x, y).
double mu(double x);

// Radicand a + bump(1/4 - (x-1)^2) - x^2 bump(x^2 - 4) of the g/h level-set
// formulas. Negative where the corresponding slice is empty.
double g_radicand(double x, double a);

// Half-widths w(x) with the sublevel slice |y - sin(pi/x)| <= w(x), x != 0.
// f_half_width requires a > 0; g_half_width returns nullopt when the radicand
// is negative. Both may return +inf near x = 0.
double f_half_width(double x, double a);
std::optional<double> g_half_width(double x, double a);

// Sublevel membership with the a = 0 queries answered through the symbolic
// characterisations and the half-width forms used for |x| >= x_cut.
struct MembershipOptions {
  double x_cut = 0.05;
};
bool in_sublevel(FieldId id, Point2 p, double a, MembershipOptions opts = {});

// Stereographic projection from the north pole (0,0,1) and its inverse.
Point2 stereographic(Vec3 w);
Vec3 inverse_stereographic(Point2 p);

// Cutoff used by sphere_h: eta = 1 on the planar disc of radius inner (which
// contains the compact set {h <= 1}), eta = 0 beyond radius outer.
struct SphereCutoff {
  double inner = 0.0;  // planar radius
  double outer = 0.0;
  double chord_inner = 0.0;  // chordal distance to the pole at radius inner (r1)
  double chord_outer = 0.0;  // at radius outer (r0 < r1)
};
const SphereCutoff& sphere_cutoff();
double sphere_eta(Vec3 w);

}  // namespace critval::fields
