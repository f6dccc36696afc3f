#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "critval/errors.hpp"
#include "critval/fields/curve.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"
#include "doctest.h"

using namespace critval;
using namespace critval::fields;

namespace {

double eval2(FieldId id, double x, double y) {
  const double p[2] = {x, y};
  return eval(id, p);
}

// Brute-force oracle for the signed distance: minimum over a dense sampling of
// the relevant set (complement of L for inside points, L for outside points).
double brute_force_inside_distance(Point2 p, double step) {
  double best = INFINITY;
  for (double x = -3.0; x <= 2.0; x += step)
    for (double y = -2.0; y <= 2.0; y += step) {
      const bool in_square = x >= -2.0 && x <= 0.0 && y >= -1.0 && y <= 1.0;
      if (in_square) continue;  // sampled points off the square are in L^C almost surely
      best = std::min(best, std::hypot(p.x - x, p.y - y));
    }
  return best;
}

double brute_force_outside_distance(Point2 p) {
  double best = INFINITY;
  // square, sampled densely
  for (double x = -2.0; x <= 0.0; x += 1e-3)
    for (double y : {-1.0, 1.0}) best = std::min(best, std::hypot(p.x - x, p.y - y));
  for (double y = -1.0; y <= 1.0; y += 1e-3)
    for (double x : {-2.0, 0.0}) best = std::min(best, std::hypot(p.x - x, p.y - y));
  // the graph of sin(pi/x), sampled in the parameter 1/x
  for (double t = 1.0; t <= 2000.0; t += 1e-4) {
    const double x = 1.0 / t;
    best = std::min(best, std::hypot(p.x - x, p.y - std::sin(std::numbers::pi * t)));
  }
  return best;
}

}  // namespace

TEST_CASE("sin_pi reduces arguments exactly") {
  CHECK(sin_pi(1.0) == 0.0);
  CHECK(sin_pi(-3.0) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1.5) == -1.0);
  CHECK(cos_pi(0.5) == 0.0);
  CHECK(cos_pi(1.0) == -1.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = t(rng);
    CHECK(sin_pi(v) == doctest::Approx(std::sin(std::numbers::pi * v)).epsilon(1e-12));
    CHECK(cos_pi(v) == doctest::Approx(std::cos(std::numbers::pi * v)).epsilon(1e-12));
  }
}

TEST_CASE("bump") {
  CHECK(bump(-1.0) == 0.0);
  CHECK(bump(0.0) == 0.0);
  CHECK(bump(1.0) == doctest::Approx(0.3678794412).epsilon(1e-10));
  CHECK(bump(0.5) == std::exp(-4.0));
  CHECK_THROWS_AS(bump(NAN), InvalidArgument);
  CHECK_THROWS_AS(bump(INFINITY), InvalidArgument);

  double prev = 0.0;
  for (double x = 0.01; x < 50.0; x += 0.01) {
    const double v = bump(x);
    CHECK(v < 1.0);
    CHECK(v >= prev);  // strictly increasing where representable
    if (prev > 0.0) CHECK(v > prev);
    prev = v;
  }
  for (double x = -50.0; x <= 0.0; x += 0.5) CHECK(bump(x) == 0.0);
}

TEST_CASE("field evaluation examples") {
  CHECK(eval2(FieldId::SmoothF, 0.0, 7.3) == 0.0);
  CHECK(eval2(FieldId::SmoothG, 1.0, 0.0) == -std::exp(-16.0));
  CHECK(eval2(FieldId::SmoothG, 1.0, 0.0) == -kExpNeg16);
  CHECK(eval2(FieldId::SmoothH, 1.0, 0.0) == -kExpNeg16);
  CHECK(eval2(FieldId::SmoothH, 0.0, 3.0) == doctest::Approx(9.0 * std::exp(-1.0 / 25.0)).epsilon(1e-15));
  const double north[3] = {0.0, 0.0, 1.0};
  CHECK(eval(FieldId::SphereH, north) == 1.0);
  const double one[1] = {2.0};
  CHECK(eval(FieldId::Bump, one) == bump(2.0));
}

TEST_CASE("field evaluation errors") {
  const double p3[3] = {0.1, 0.2, 0.3};
  CHECK_THROWS_AS(eval(FieldId::SmoothF, p3), InvalidArgument);
  CHECK_THROWS_AS(eval(FieldId::SphereH, p3), InvalidArgument);  // off the sphere
  const double p2[2] = {0.0, 1.0};
  CHECK_THROWS_AS(eval(FieldId::SphereH, p2), InvalidArgument);
  CHECK_THROWS_AS(parse_field("NOPE"), InvalidArgument);
  CHECK(parse_field("SMOOTH_H") == FieldId::SmoothH);
}

TEST_CASE("signed distance against brute-force oracles") {
  const double inside = brute_force_inside_distance({-1.0, 0.0}, 0.01);
  CHECK(eval2(FieldId::SignedDist, -1.0, 0.0) == doctest::Approx(-inside).epsilon(1e-2));
  CHECK(eval2(FieldId::SignedDist, -1.0, 0.0) == -1.0);
  CHECK(eval2(FieldId::SignedDist, -0.5, 0.9) == doctest::Approx(-0.1));

  const CurveApprox& curve = CurveApprox::standard();
  const double tolerance = 2.0 * curve.max_gap();
  for (Point2 p : {Point2{0.5, 1.5}, Point2{1.5, 0.0}, Point2{0.3, -1.2}, Point2{-2.5, 0.3}, Point2{0.7, 0.2},
                   Point2{0.05, 1.3}, Point2{1.2, -2.0}}) {
    const double oracle = brute_force_outside_distance(p);
    CHECK(std::fabs(eval2(FieldId::SignedDist, p.x, p.y) - oracle) <= tolerance);
  }
}

TEST_CASE("curve approximation invariants") {
  const CurveApprox& curve = CurveApprox::standard();
  const auto v = curve.vertices();
  REQUIRE(v.size() > 1000);
  CHECK(v.front().x == curve.x_min());
  CHECK(v.back().x == 1.0);
  CHECK(v.back().y == 0.0);
  double max_gap = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i % 97 == 0) CHECK(std::fabs(v[i].y - std::sin(std::numbers::pi / v[i].x)) <= 1e-12);
    if (i > 0) max_gap = std::max(max_gap, distance(v[i], v[i - 1]));
  }
  CHECK(max_gap <= curve.max_gap());
}

TEST_CASE("tau") {
  CHECK(tau(0.0) == 2.0);
  const double t = tau(1.0);
  CHECK(t > 2.0);
  CHECK(t < 8.0);
  CHECK(std::fabs(t * t * bump(t * t - 4.0) - 1.0) <= 1e-9);
  CHECK_THROWS_AS(tau(-0.1), InvalidArgument);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> level(0.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    double a1 = level(rng), a2 = level(rng);
    if (a1 == a2) continue;
    if (a1 > a2) std::swap(a1, a2);
    CHECK(tau(a2) > tau(a1));
    const double x = tau(a2);
    CHECK(std::fabs(x * x * bump(x * x - 4.0) - a2) <= 1e-9);
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(-kExpNeg16) == 0.0);
  CHECK(sigma_from_log_magnitude(16.0) == 0.0);
  CHECK(sigma_from_log_magnitude(10000.0) == doctest::Approx(std::sqrt(0.25 - 0.01)).epsilon(1e-14));
  CHECK(sigma_from_log_magnitude(10000.0) == doctest::Approx(0.489898).epsilon(1e-6));
  const double s10 = sigma(-1e-10);
  const double s8 = sigma(-1e-8);
  CHECK(s10 > 0.0);
  CHECK(s10 < 0.5);
  CHECK(s10 > s8);
  // closed form away from the boundary
  CHECK(s8 == doctest::Approx(std::sqrt(0.25 - std::sqrt(-1.0 / std::log(1e-8)))).epsilon(1e-12));
  CHECK_THROWS_AS(sigma(-1e-3), DomainError);
  CHECK_THROWS_AS(sigma(0.0), DomainError);
  CHECK_THROWS_AS(sigma_from_log_magnitude(15.0), DomainError);
}

TEST_CASE("sigma bounds the negative sublevel sets of g") {
  for (double a : {-1e-7, -1e-8, -1e-12, -1e-40}) {
    const double s = sigma(a);
    // inside the window the radicand is non-negative, outside it is negative
    CHECK(g_radicand(1.0 + 0.999 * s, a) >= 0.0);
    CHECK(g_radicand(1.0 - 0.999 * s, a) >= 0.0);
    CHECK(g_radicand(1.0 + 1.001 * s, a) < 0.0);
    CHECK(g_radicand(1.0 - 1.001 * s, a) < 0.0);
  }
}

TEST_CASE("mu") {
  CHECK(mu(1.0) == -kExpNeg16);
  CHECK(mu(0.0) == 0.0);
  CHECK(mu(3.0) == 9.0 * std::exp(-1.0 / 25.0));
  for (double x = -3.0; x <= 3.0; x += 0.0371) {
    double best = INFINITY;
    std::vector<double> ys;
    for (double y = -4.0; y <= 4.0; y += 1e-3) ys.push_back(y);
    if (x != 0.0) ys.push_back(sine_curve(x));
    for (double y : ys) best = std::min(best, smooth_h(x, y));
    CHECK(std::fabs(best - mu(x)) <= 1e-12);
    if (x != 0.0) CHECK(std::fabs(smooth_h(x, sine_curve(x)) - mu(x)) <= 1e-12);
  }
}

TEST_CASE("smooth field pointwise properties") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(-6.0, 6.0);
  for (int i = 0; i < 20000; ++i) {
    const double x = ux(rng), y = uy(rng);
    CHECK(smooth_f(x, y) >= 0.0);
    CHECK(smooth_g(x, y) >= -kExpNeg16 - 1e-18);
    if (std::fabs(y) <= 2.0) CHECK(smooth_h(x, y) == smooth_g(x, y));
    if (x != 0.0) CHECK(smooth_f(x, sine_curve(x)) == 0.0);
  }
}

TEST_CASE("sublevel membership matches the half-width characterisation") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(0.2, 4.0), uy(-5.0, 5.0), ua(1e-4, 2.0);
  std::bernoulli_distribution neg(0.5);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    const double x = neg(rng) ? -ux(rng) : ux(rng);
    const double y = uy(rng), a = ua(rng);
    const double v = smooth_f(x, y);
    if (std::fabs(v - a) <= 1e-12 * std::max(1.0, a)) continue;
    const bool direct = v <= a;
    const bool by_width = std::fabs(y - sine_curve(x)) <= std::sqrt(a) * std::exp(1.0 / (2.0 * x * x));
    CHECK(direct == by_width);
    CHECK(in_sublevel(FieldId::SmoothF, {x, y}, a) == direct);
    ++checked;
  }
  CHECK(checked > 19000);
}

TEST_CASE("zero-level membership is symbolic") {
  CHECK(in_sublevel(FieldId::SmoothF, {0.0, 123.0}, 0.0));
  CHECK(in_sublevel(FieldId::SmoothF, {0.3, sine_curve(0.3)}, 0.0));
  // e^{-1/x^2} underflows here but the point is not on the curve
  CHECK_FALSE(in_sublevel(FieldId::SmoothF, {0.01, sine_curve(0.01) + 1e-3}, 0.0));
  CHECK(smooth_f(0.01, sine_curve(0.01) + 1e-3) == 0.0);
  CHECK(in_sublevel(FieldId::SmoothH, {0.0, 2.0}, 0.0));
  CHECK_FALSE(in_sublevel(FieldId::SmoothH, {0.0, 2.0001}, 0.0));
  CHECK(in_sublevel(FieldId::SmoothG, {0.0, 50.0}, 0.0));
  CHECK(in_sublevel(FieldId::SmoothG, {1.0, 0.0}, 0.0));
  CHECK(in_sublevel(FieldId::SmoothG, {1.0, 5e-4}, 0.0));  // inside the bulge
  CHECK_FALSE(in_sublevel(FieldId::SmoothG, {1.0, 6e-4}, 0.0));
  CHECK_FALSE(in_sublevel(FieldId::SmoothG, {2.5, sine_curve(2.5)}, 0.0));
  CHECK(in_sublevel(FieldId::SignedDist, {0.25, sine_curve(0.25)}, 0.0));
  CHECK(in_sublevel(FieldId::SignedDist, {-2.0, 1.0}, 0.0));
  CHECK_FALSE(in_sublevel(FieldId::SignedDist, {0.25, 0.5}, 0.0));
}

TEST_CASE("sphere compactification pulls back to h") {
  const SphereCutoff& cut = sphere_cutoff();
  CHECK(cut.chord_outer < cut.chord_inner);
  CHECK(cut.inner > std::sqrt(2.0) * tau(1.0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 5000; ++i) {
    const Point2 p{u(rng), u(rng)};
    const Vec3 w = inverse_stereographic(p);
    const Point2 back = stereographic(w);
    CHECK(back.x == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-12));
    if (std::hypot(p.x, p.y) <= cut.inner) {
      CHECK(sphere_eta(w) == 1.0);
      CHECK(sphere_h(w) == smooth_h(back.x, back.y));
    } else {
      CHECK(sphere_h(w) >= 1.0);
    }
  }
  CHECK(sphere_eta({0.0, 0.0, 1.0}) == 0.0);
}
