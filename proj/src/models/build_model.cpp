#include "critval/models/build_model.hpp"

#include <algorithm>
#include <string>

#include "critval/errors.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"

namespace critval::models {

namespace {

using fields::kExpNeg16;

constexpr Point2 kOrigin{0.0, 0.0};

LimitTag sine_oscillation() { return LimitTag::oscillates(-1.0, 1.0); }

std::vector<Piece> squeeze(double a) {
  // X = {0} x [-1,1] u (0,1) x (0,1] u {1} x [0,1], f = y.
  std::vector<Piece> out;
  if (a < -1.0) return out;
  const double top = std::min(a, 1.0);
  out.push_back(make_vseg(0.0, Span::closed(-1.0, top), "left_edge"));
  if (a < 0.0) return out;
  if (a > 0.0) {
    Piece rect = make_rect(Span::open(0.0, 1.0), {{0.0, false}, {top, true}}, "square");
    rect.left = LimitTag::converges({0.0, top});
    rect.right = LimitTag::converges({1.0, top});
    out.push_back(rect);
  }
  out.push_back(make_vseg(1.0, Span::closed(0.0, top), "right_edge"));
  return out;
}

// Top level K_r of the stacked family, r in [0, 1].
void top_level(double r, std::vector<Piece>& out) {
  if (r == 0.0) {
    out.push_back(make_vseg(0.0, Span::closed(-1.0, 1.0), "limit_segment"));
    out.push_back(make_tube({{0.0, false}, {1.0, true}}, Profile::SineCurve, 0.0, sine_oscillation(),
                            LimitTag::none(), {1.0, 0.0}, "sine_curve"));
    return;
  }
  out.push_back(make_rect(Span::closed(0.0, r), Span::closed(-1.0, 1.0), "filled_band"));
  if (r < 1.0)
    out.push_back(make_tube({{r, false}, {1.0, true}}, Profile::SineCurve, 0.0,
                            LimitTag::converges({r, fields::sine_curve(r)}), LimitTag::none(), {1.0, 0.0},
                            "sine_curve"));
}

std::vector<Piece> stacked_sine(double a) {
  // Sublevel sets deformation retract onto the top level K_a x {a}, with the
  // stem {(1,0)} x [-1,0] and the lower levels carried by the STACK piece.
  std::vector<Piece> out;
  if (a < -1.0) return out;
  if (a < 0.0) {
    out.push_back(make_stack({-1.0, a}, {1.0, 0.0}, "stem"));
    return out;
  }
  const double r = std::min(a, 1.0);
  out.push_back(make_stack({-1.0, r}, {1.0, 0.0}, "stem_and_lower_levels"));
  top_level(r, out);
  return out;
}

std::vector<Piece> signed_dist(double a) {
  std::vector<Piece> out;
  if (a < -1.0) return out;
  if (a < 0.0) {
    out.push_back(make_rect(Span::closed(-2.0 - a, a), Span::closed(-1.0 - a, 1.0 + a), "inner_square"));
    return out;
  }
  if (a == 0.0) {
    out.push_back(make_rect(Span::closed(-2.0, 0.0), Span::closed(-1.0, 1.0), "square"));
    out.push_back(make_tube({{0.0, false}, {1.0, true}}, Profile::SineCurve, 0.0, sine_oscillation(),
                            LimitTag::none(), {1.0, 0.0}, "sine_curve"));
    return out;
  }
  out.push_back(make_tube(Span::closed(-2.0 - a, 1.0 + a), Profile::DistSlice, a, LimitTag::none(), LimitTag::none(),
                          {-1.0, 0.0}, "thickened_set"));
  return out;
}

// Left tube, x = 0 segment, right tube of SMOOTH_F/G/H at a >= 0, with
// x-extent [-reach, reach] (infinite for SMOOTH_F).
std::vector<Piece> three_pieces(Profile profile, double a, double reach, Span segment) {
  const LimitTag inner = a > 0.0 ? LimitTag::converges(kOrigin) : sine_oscillation();
  const Bound outer{reach, std::isfinite(reach)};
  std::vector<Piece> out;
  out.push_back(make_tube({{-outer.value, outer.closed}, {0.0, false}}, profile, a, LimitTag::none(), inner,
                          {-1.0, 0.0}, "left_tube"));
  out.push_back(make_vseg(0.0, segment, "axis_segment"));
  out.push_back(make_tube({{0.0, false}, outer}, profile, a, inner, LimitTag::none(), {1.0, 0.0},
                          a == 0.0 ? "right_tube_with_bulge" : "right_tube"));
  return out;
}

std::vector<Piece> bulge_only(Profile profile, double a) {
  const double s = fields::sigma(a);
  return {make_tube(Span::closed(1.0 - s, 1.0 + s), profile, a, LimitTag::none(), LimitTag::none(), {1.0, 0.0},
                    "bulge")};
}

std::vector<Piece> smooth_f(double a) {
  if (a < 0.0) return {};
  return three_pieces(a > 0.0 ? Profile::FWidth : Profile::SineCurve, a, kInf, Span::whole());
}

std::vector<Piece> smooth_g(double a) {
  if (a < -kExpNeg16) return {};
  if (a < 0.0) return bulge_only(Profile::GWidth, a);
  return three_pieces(Profile::GWidth, a, fields::tau(a), Span::whole());
}

std::vector<Piece> smooth_h(double a) {
  if (a < -kExpNeg16) return {};
  if (a < 0.0) return bulge_only(Profile::HSlice, a);
  const double t = fields::tau(a);
  return three_pieces(Profile::HSlice, a, t, Span::closed(-t, t));
}

}  // namespace

PieceComplex build_model(FamilyId family, double a) {
  if (!std::isfinite(a)) throw InvalidArgument("build_model: level must be finite");
  const FamilyInfo& info = family_info(family);
  if (a >= info.level_sup)
    throw UnsupportedLevel(std::string(to_string(family)) + ": levels >= " + std::to_string(info.level_sup) +
                           " are not modelled");
  PieceComplex m;
  m.family = family;
  m.level = a;
  switch (family) {
    case FamilyId::Squeeze:
      m.pieces = squeeze(a);
      break;
    case FamilyId::StackedSine:
      m.pieces = stacked_sine(a);
      break;
    case FamilyId::SignedDist:
      m.pieces = signed_dist(a);
      if (a > 0.0) m.section = signed_dist_section(a);
      break;
    case FamilyId::SmoothF:
      m.pieces = smooth_f(a);
      break;
    case FamilyId::SmoothG:
      m.pieces = smooth_g(a);
      break;
    case FamilyId::SmoothH:
      m.pieces = smooth_h(a);
      if (a > 0.0) m.section = smooth_h_section(a, h_tube_constants(a));
      break;
    case FamilyId::SphereH:
      // Sublevel sets of the sphere field below 1 are those of h, carried
      // over by stereographic projection.
      m.pieces = smooth_h(a);
      break;
  }
  m.adjacency = derive_adjacency(m.pieces);
  return m;
}

}  // namespace critval::models
