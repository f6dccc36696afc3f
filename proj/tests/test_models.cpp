#include <cmath>
#include <random>
#include <vector>

#include "critval/errors.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"
#include "critval/models/build_model.hpp"
#include "critval/models/column_complex.hpp"
#include "critval/models/induced_rank.hpp"
#include "critval/models/section.hpp"
#include "critval/models/serialize.hpp"
#include "doctest.h"

using namespace critval;
using namespace critval::models;
using fields::kExpNeg16;

namespace {

// Runs of {y : member(y)} on an equally spaced y-scan, as [first, last] hits.
template <class Member>
std::vector<Interval> scan_runs(Member member, Interval window, int n) {
  std::vector<Interval> runs;
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const double y = window.lo + (window.hi - window.lo) * i / (n - 1);
    const bool in = member(y);
    if (in && !inside) runs.push_back({y, y});
    if (in) runs.back().hi = y;
    inside = in;
  }
  return runs;
}

}  // namespace

TEST_CASE("family registry") {
  CHECK(parse_family("SPHERE_H") == FamilyId::SphereH);
  CHECK_THROWS_AS(parse_family("TORUS"), InvalidArgument);
  for (FamilyId f : all_families()) {
    CHECK(parse_family(to_string(f)) == f);
    const auto& specials = family_info(f).special_levels;
    CHECK(std::is_sorted(specials.begin(), specials.end()));
    CHECK(specials.front() == family_info(f).min_value);
  }
  CHECK_FALSE(family_info(FamilyId::SmoothF).counterexample);
}

TEST_CASE("build_model examples") {
  const PieceComplex squeeze = build_model(FamilyId::Squeeze, -0.5);
  REQUIRE(squeeze.pieces.size() == 1);
  CHECK(squeeze.pieces[0].kind == PieceKind::VSeg);
  CHECK(squeeze.pieces[0].x == Span::point(0.0));
  CHECK(squeeze.pieces[0].y == Span::closed(-1.0, -0.5));

  CHECK(build_model(FamilyId::SmoothG, -0.001).empty());

  const PieceComplex h0 = build_model(FamilyId::SmoothH, 0.0);
  REQUIRE(h0.pieces.size() == 3);
  CHECK(h0.component_count() == 3);
  CHECK(h0.pieces[0].kind == PieceKind::Tube);
  CHECK(h0.pieces[0].x.hi == Bound{0.0, false});
  CHECK(h0.pieces[1].kind == PieceKind::VSeg);
  CHECK(h0.pieces[1].y == Span::closed(-2.0, 2.0));
  CHECK(h0.pieces[2].kind == PieceKind::Tube);
  CHECK(h0.pieces[2].x.lo == Bound{0.0, false});
  // the bulge: a positive-width slice inside (1/2, 3/2), a single point outside
  CHECK(h0.pieces[2].slice(1.0)->hi.value > h0.pieces[2].slice(1.0)->lo.value);
  CHECK(h0.pieces[2].slice(0.4)->degenerate());
  CHECK(h0.pieces[2].slice(1.6)->degenerate());

  CHECK_THROWS_AS(build_model(FamilyId::SphereH, 1.0), UnsupportedLevel);
  CHECK_THROWS_AS(build_model(FamilyId::Squeeze, NAN), InvalidArgument);
}

TEST_CASE("betti examples") {
  CHECK(betti(build_model(FamilyId::Squeeze, 0.0), 0) == 2);
  CHECK(betti(build_model(FamilyId::Squeeze, 0.5), 0) == 1);
  CHECK(betti(build_model(FamilyId::SmoothH, 1.0), 1) == 0);
  CHECK_THROWS_AS(betti(build_model(FamilyId::SmoothH, 1.0), 2), InvalidArgument);
}

TEST_CASE("path-component counts at the registered levels") {
  struct Row {
    FamilyId family;
    double level;
    int b0;
  };
  const Row table[] = {
      {FamilyId::Squeeze, -0.5, 1},     {FamilyId::Squeeze, 0.0, 2},     {FamilyId::Squeeze, 0.5, 1},
      {FamilyId::StackedSine, -0.5, 1}, {FamilyId::StackedSine, 0.0, 2}, {FamilyId::StackedSine, 0.5, 1},
      {FamilyId::SignedDist, -0.5, 1},  {FamilyId::SignedDist, 0.0, 2},  {FamilyId::SignedDist, 0.5, 1},
      {FamilyId::SmoothH, -1e-8, 1},    {FamilyId::SmoothH, 0.0, 3},     {FamilyId::SmoothH, 0.01, 1},
      {FamilyId::SmoothH, 1.0, 1},
  };
  for (const Row& r : table) {
    CAPTURE(to_string(r.family));
    CAPTURE(r.level);
    const PieceComplex m = build_model(r.family, r.level);
    CHECK(betti(m, 0) == r.b0);
    CHECK(betti(m, 1) == 0);
  }
}

TEST_CASE("adjacency follows the limit rule") {
  const Piece axis = make_vseg(0.0, Span::closed(-1.0, 1.0), "axis");
  const Span right_of_axis{{0.0, false}, {1.0, true}};
  const Piece oscillating = make_tube(right_of_axis, Profile::SineCurve, 0.0, LimitTag::oscillates(-1.0, 1.0),
                                      LimitTag::none(), {1.0, 0.0}, "osc");
  const Piece converging = make_tube(right_of_axis, Profile::SineCurve, 0.0, LimitTag::converges({0.0, 0.5}),
                                     LimitTag::none(), {1.0, 0.0}, "conv");
  const Piece far = make_tube(right_of_axis, Profile::SineCurve, 0.0, LimitTag::converges({0.0, 5.0}),
                              LimitTag::none(), {1.0, 0.0}, "far");
  CHECK(derive_adjacency({axis, oscillating}).empty());
  CHECK(derive_adjacency({axis, converging}).size() == 1);
  CHECK(derive_adjacency({axis, far}).empty());
  // closed contact at a shared abscissa
  const Piece square = make_rect(Span::closed(-2.0, 0.0), Span::closed(-1.0, 1.0), "square");
  const Piece touching = make_vseg(0.0, Span::closed(1.0, 3.0), "touching");
  const Piece apart = make_vseg(0.0, Span::closed(1.5, 3.0), "apart");
  CHECK(derive_adjacency({square, touching}).size() == 1);
  CHECK(derive_adjacency({square, apart}).empty());
  const Piece overlapping = make_rect(Span::closed(-1.0, 1.0), Span::closed(5.0, 6.0), "overlap");
  CHECK_THROWS_AS(derive_adjacency({square, overlapping}), InconsistencyError);
  CHECK_THROWS_AS(LimitTag::oscillates(1.0, 1.0), InvalidArgument);
}

TEST_CASE("oscillation tag of sin(pi/x) is sound") {
  // the range of sin(pi/x) over (0, delta) reaches both -1 and 1
  for (double delta = 0.5; delta > 1e-4; delta /= 3.0) {
    double lo = 1.0, hi = -1.0;
    for (int n = static_cast<int>(std::ceil(1.0 / delta)) + 1; n < static_cast<int>(1.0 / delta) + 40; ++n) {
      for (double t : {n + 0.5, n + 1.5}) {
        const double x = 1.0 / t;
        REQUIRE(x < delta);
        lo = std::min(lo, fields::sine_curve(x));
        hi = std::max(hi, fields::sine_curve(x));
      }
    }
    CHECK(lo <= -1.0 + 1e-6);
    CHECK(hi >= 1.0 - 1e-6);
  }
  const PieceComplex l = build_model(FamilyId::SignedDist, 0.0);
  CHECK(l.pieces[1].left.kind == LimitTag::Kind::Oscillates);
  CHECK(l.pieces[1].left.lower == -1.0);
  CHECK(l.pieces[1].left.upper == 1.0);
}

TEST_CASE("induced_rank examples") {
  CHECK(induced_rank(FamilyId::Squeeze, 0, -0.5, 0.0) == 1);
  CHECK(betti(build_model(FamilyId::Squeeze, 0.0), 0) == 2);
  const double eps = 0.25;
  CHECK(induced_rank(FamilyId::Squeeze, 0, -eps, eps) == 1);
  CHECK(betti(build_model(FamilyId::Squeeze, -eps), 0) == 1);
  CHECK(betti(build_model(FamilyId::Squeeze, eps), 0) == 1);
  for (auto [a, b] : {std::pair{-1e-7, -1e-8}, std::pair{-1e-8, -1e-9}, std::pair{-1e-10, -1e-12}}) {
    const int oracle = std::min(betti(build_model(FamilyId::SmoothH, a), 0), betti(build_model(FamilyId::SmoothH, b), 0));
    CHECK(induced_rank(FamilyId::SmoothH, 0, a, b) == oracle);
    CHECK(oracle == 1);
  }
  CHECK_THROWS_AS(induced_rank(FamilyId::Squeeze, 0, 0.5, 0.0), InvalidArgument);
}

TEST_CASE("open sublevel ranks") {
  // the open sublevel set {y < 0} of the squeeze space is the segment below 0
  CHECK(induced_rank(FamilyId::Squeeze, 0, 0.0, 0.0, Openness::OpenToOpen) == 1);
  CHECK(induced_rank(FamilyId::Squeeze, 0, -0.5, 0.5, Openness::OpenToOpen) == 1);
  CHECK(induced_rank(FamilyId::SmoothH, 0, 0.0, 0.0, Openness::OpenToOpen) == 1);
  CHECK(induced_rank(FamilyId::SmoothH, 0, -kExpNeg16, 0.5, Openness::OpenToOpen) == 0);
  CHECK(induced_rank(FamilyId::SmoothF, 0, 0.0, 1.0, Openness::OpenToOpen) == 0);
}

TEST_CASE("rank sandwich and composition bound on sampled triples") {
  std::mt19937_64 rng(99);
  for (FamilyId f : all_families()) {
    std::vector<double> levels = {-1.5, -1.0, -0.75, -0.5, -kExpNeg16, -1e-8, 0.0, 1e-3, 0.01, 0.25, 0.5, 0.9};
    std::shuffle(levels.begin(), levels.end(), rng);
    levels.resize(8);
    std::sort(levels.begin(), levels.end());
    for (std::size_t i = 0; i < levels.size(); ++i)
      for (std::size_t j = i; j < levels.size(); ++j)
        for (std::size_t k = j; k < levels.size(); ++k) {
          const double a = levels[i], b = levels[j], c = levels[k];
          for (int deg : {0, 1}) {
            CAPTURE(to_string(f));
            const int ab = induced_rank(f, deg, a, b);
            const int bc = induced_rank(f, deg, b, c);
            const int ac = induced_rank(f, deg, a, c);
            CHECK(ab <= std::min(betti(build_model(f, a), deg), betti(build_model(f, b), deg)));
            CHECK(ac <= std::min(ab, bc));
          }
        }
  }
}

TEST_CASE("column_complex examples") {
  const GridSpec coarse{0.01, {-8.0, 8.0}, {-6.0, 6.0}, 0.05};
  const ColumnComplex g1 = column_complex(FamilyId::SmoothG, 1.0, coarse);
  const double t1 = fields::tau(1.0);
  for (const Column& c : g1.columns) {
    if (c.symbolic) continue;
    CAPTURE(c.x);
    CHECK(c.cells.empty() == (std::fabs(c.x) > t1));
  }
  CHECK(g1.columns.front().x == -8.0);

  const GridSpec fine{0.005, {-8.0, 8.0}, {-6.0, 6.0}, 0.05};
  const ColumnComplex f = column_complex(FamilyId::SmoothF, 0.01, fine);
  for (const Column& c : f.columns) {
    if (c.symbolic || c.cells.empty()) continue;
    REQUIRE(c.cells.size() == 1);
    const Interval cell = c.cells[0];
    if (cell.lo > -6.0 && cell.hi < 6.0) CHECK(0.5 * (cell.lo + cell.hi) == doctest::Approx(fields::sine_curve(c.x)));
  }

  const ColumnComplex sd = column_complex(FamilyId::SignedDist, 0.1, coarse);
  CHECK(betti_grid(sd, 0) == 1);

  CHECK_THROWS_AS(column_complex(FamilyId::SmoothG, 0.0), UnsupportedLevel);
  CHECK_THROWS_AS(column_complex(FamilyId::Squeeze, 0.5), UnsupportedLevel);
}

TEST_CASE("betti_grid examples") {
  CHECK(betti_grid(column_complex(FamilyId::SmoothH, 1.0), 0) == 1);

  ColumnComplex blocks;
  for (int i = 0; i < 10; ++i) {
    Column c{static_cast<double>(i), {}, false};
    if (i < 4) c.cells.push_back({0.0, 1.0});
    if (i > 5) c.cells.push_back({0.0, 1.0});
    blocks.columns.push_back(c);
  }
  blocks.check();
  CHECK(betti_grid(blocks, 0) == 2);
  CHECK(betti_grid(blocks, 1) == 0);

  // an annulus of cells has one independent cycle
  ColumnComplex ring;
  ring.columns = {{0.0, {{0.0, 3.0}}, false}, {1.0, {{0.0, 1.0}, {2.0, 3.0}}, false}, {2.0, {{0.0, 3.0}}, false}};
  CHECK(betti_grid(ring, 0) == 1);
  CHECK(betti_grid(ring, 1) == 1);

  const ColumnComplex g = column_complex(FamilyId::SmoothG, 0.01);
  CHECK(betti_grid(g, 0) == betti(build_model(FamilyId::SmoothG, 0.01), 0));
}

TEST_CASE("grid and symbolic models agree for the tube families") {
  for (FamilyId f : {FamilyId::SmoothF, FamilyId::SmoothG, FamilyId::SmoothH})
    for (double a : {0.01, 0.1, 1.0}) {
      const ColumnComplex cc = column_complex(f, a);
      const PieceComplex m = build_model(f, a);
      for (int k : {0, 1}) {
        CAPTURE(to_string(f));
        CAPTURE(a);
        CHECK(betti_grid(cc, k) == betti(m, k));
      }
    }
}

TEST_CASE("column cells match a membership scan") {
  const GridSpec grid{0.01, {-3.0, 3.0}, {-3.0, 3.0}, 0.05};
  for (FamilyId f : {FamilyId::SmoothG, FamilyId::SmoothH, FamilyId::SignedDist}) {
    const double a = 0.1;
    const ColumnComplex cc = column_complex(f, a, grid);
    const auto field = *family_info(f).field;
    for (std::size_t i = 0; i < cc.columns.size(); i += 37) {
      const Column& c = cc.columns[i];
      if (c.symbolic) continue;
      const auto runs = scan_runs(
          [&](double y) {
            const double p[2] = {c.x, y};
            return fields::eval(field, p) <= a;
          },
          {-3.0, 3.0}, 6001);
      CAPTURE(to_string(f));
      CAPTURE(c.x);
      REQUIRE(runs.size() == c.cells.size());
      for (std::size_t j = 0; j < runs.size(); ++j) {
        CHECK(std::fabs(runs[j].lo - c.cells[j].lo) <= 2e-3);
        CHECK(std::fabs(runs[j].hi - c.cells[j].hi) <= 2e-3);
      }
    }
  }
}

TEST_CASE("section_check examples") {
  const SectionReport sd = section_check(FamilyId::SignedDist, 0.1, signed_dist_section(0.1), 10000);
  CHECK(sd.certified);
  CHECK(sd.graph_failures == 0);
  CHECK(sd.slices_checked > 0);

  const TubeConstants tube = h_tube_constants(0.01);
  CHECK(tube.alpha < 0.0);
  CHECK(tube.beta > 0.0);
  const SectionSpec hs = smooth_h_section(0.01, tube);
  CHECK(hs.continuous());
  CHECK(section_check(FamilyId::SmoothH, 0.01, hs, 10000).certified);

  SectionSpec ten;
  ten.branches.push_back({SectionBranch::Kind::Constant, -1.0, 1.0, 10.0, 10.0});
  const SectionReport bad = section_check(FamilyId::SmoothH, 0.01, ten, 100);
  CHECK_FALSE(bad.certified);
  CHECK(bad.graph_failures == 100);

  CHECK(signed_dist_section(0.1).continuous());
  CHECK_THROWS_AS(section_check(FamilyId::Squeeze, 0.5, ten, 10), UnsupportedLevel);
}

TEST_CASE("interval_union examples") {
  const Interval u = interval_union([](double w) { return w; }, [](double w) { return w + 1.0; }, {0.0, 1.0}, 1000);
  CHECK(u == Interval{0.0, 2.0});
  CHECK(interval_union([](double) { return 0.0; }, [](double) { return 0.0; }, {0.0, 1.0}, 10) == Interval{0.0, 0.0});
  CHECK_THROWS_AS(interval_union([](double) { return 1.0; }, [](double) { return 0.0; }, {0.0, 1.0}, 10),
                  PreconditionViolation);
  // two far apart clusters leave a gap
  CHECK_THROWS_AS(interval_union([](double w) { return w < 0.5 ? 0.0 : 10.0; },
                                 [](double w) { return w < 0.5 ? 1.0 : 11.0; }, {0.0, 1.0}, 100),
                  InconsistencyError);

  // disc slices over A = L cap ([b - a, b + a] x R) at b = -1, parametrised
  // along the segment {b} x [-1, 1] of A
  const double a = 0.1;
  const double b = -1.0;
  const Interval slice = interval_union([&](double w) { return -1.0 + 2.0 * w - a; },
                                        [&](double w) { return -1.0 + 2.0 * w + a; }, {0.0, 1.0}, 1000);
  const auto runs = scan_runs([&](double y) { return fields::signed_distance(b, y) <= a; }, {-2.0, 2.0}, 40001);
  REQUIRE(runs.size() == 1);
  CHECK(std::fabs(runs[0].lo - slice.lo) <= 2e-4);
  CHECK(std::fabs(runs[0].hi - slice.hi) <= 2e-4);
}

TEST_CASE("disc-slice union agrees with the distance field") {
  for (double a : {0.05, 0.3})
    for (double x : {-2.2, -1.0, -0.02, 0.01, 0.2, 0.55, 1.0, 1.2}) {
      const auto slice = dist_slice(x, a);
      const auto runs = scan_runs([&](double y) { return fields::signed_distance(x, y) <= a; }, {-2.0, 2.0}, 4001);
      CAPTURE(a);
      CAPTURE(x);
      REQUIRE(runs.size() == (slice ? 1u : 0u));
      if (!slice) continue;
      CHECK(std::fabs(runs[0].lo - slice->lo) <= 3e-3);
      CHECK(std::fabs(runs[0].hi - slice->hi) <= 3e-3);
    }
}

TEST_CASE("serialized models") {
  const auto j = to_json(build_model(FamilyId::SmoothH, 0.0));
  CHECK(j["family"] == "SMOOTH_H");
  CHECK(j["pieces"].size() == 3);
  CHECK(j["adjacency"].empty());
  CHECK(j["betti"]["0"] == 3);
  CHECK(j["pieces"][1]["y"]["lo"] == -2.0);
  const auto f = to_json(build_model(FamilyId::SmoothF, 1.0));
  CHECK(f["pieces"][0]["x"]["lo"] == "-inf");
  CHECK(number_from_json(f["pieces"][0]["x"]["lo"]) == -kInf);
  CHECK_THROWS_AS(number_from_json("nan"), InvalidArgument);
  const auto sd = to_json(build_model(FamilyId::SignedDist, 0.1));
  CHECK(sd["section"]["branches"].size() == 3);
  const auto grid = to_json(column_complex(FamilyId::SmoothG, 1.0));
  CHECK(grid["betti"]["0"] == 1);
}
