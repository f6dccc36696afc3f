#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "critval/cli/svg.hpp"
#include "critval/errors.hpp"
#include "critval/fields/polynomial.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/models/build_model.hpp"
#include "critval/models/column_complex.hpp"
#include "critval/models/piece_complex.hpp"
#include "critval/models/section.hpp"
#include "critval/persistence/criticality.hpp"
#include "critval/persistence/extract.hpp"
#include "critval/persistence/lemmas.hpp"
#include "critval/persistence/random_barcode.hpp"

using namespace critval;
using models::FamilyId;
namespace ps = critval::persistence;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool components_are(FamilyId f, std::vector<double> levels, std::vector<int> want) {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (models::betti(models::build_model(f, levels[i]), 0) != want[i]) return false;
  return true;
}

Outcome squeeze() {
  Checker c;
  c.expect(components_are(FamilyId::Squeeze, {-0.5, 0.0, 0.5}, {1, 2, 1}), "betti(SQUEEZE) != {1, 2, 1}");
  const ps::Barcode bc = ps::extract_barcode(FamilyId::Squeeze, 0);
  c.expect(ps::check_cvl(bc, 0, -0.5, 0.0).violation, "check_cvl on [-0.5, 0] is not a violation");
  const ps::CriticalityReport r = ps::classify(bc, 0.0);
  c.expect(r.symmetric == ps::Verdict::Regular, "0 is symmetric-critical");
  c.expect(r.bs == ps::Verdict::Critical, "0 is BS-regular");
  return c.out;
}

Outcome stacked_and_signed_distance() {
  Checker c;
  c.expect(components_are(FamilyId::StackedSine, {-0.5, 0.0, 0.5}, {1, 2, 1}), "betti(STACKED_SINE) != {1, 2, 1}");
  c.expect(components_are(FamilyId::SignedDist, {-0.5, 0.0, 0.5}, {1, 2, 1}), "betti(SIGNED_DIST) != {1, 2, 1}");
  const models::PieceComplex m = models::build_model(FamilyId::SignedDist, 0.1);
  c.expect(m.section.has_value(), "SIGNED_DIST at 0.1 has no section");
  if (m.section) {
    const models::SectionReport rep = models::section_check(FamilyId::SignedDist, 0.1, *m.section, 10000);
    c.expect(rep.samples == 10000, "section_check did not take 10^4 samples");
    c.expect(rep.certified, "section_check failed: " + std::to_string(rep.graph_failures) + " graph, " +
                                std::to_string(rep.slice_failures) + " slice failures");
  }
  return c.out;
}

Outcome smooth_family() {
  Checker c;
  const auto b0 = [](double a) { return models::betti(models::build_model(FamilyId::SmoothH, a), 0); };
  c.expect(b0(0.0) == 3, "betti(SMOOTH_H, 0) != 3");
  for (double a : {-1e-8, 0.01, 1.0}) c.expect(b0(a) == 1, "betti(SMOOTH_H, " + fmt(a) + ") != 1");
  c.expect(models::build_model(FamilyId::SmoothH, -0.001).empty(), "SMOOTH_H at -0.001 is not empty");
  c.expect(std::fabs(fields::tau(0.0) - 2.0) <= 1e-9, "tau(0) != 2");
  c.expect(std::fabs(fields::sigma(-fields::kExpNeg16)) <= 1e-12, "sigma(-e^-16) != 0");
  c.expect(fields::smooth_g(1.0, 0.0) == -fields::kExpNeg16, "g(1, 0) != -e^-16");
  c.expect(fields::smooth_h(1.0, 0.0) == -fields::kExpNeg16, "h(1, 0) != -e^-16");
  return c.out;
}

Outcome grid_agreement() {
  Checker c;
  for (FamilyId f : {FamilyId::SmoothF, FamilyId::SmoothG, FamilyId::SmoothH})
    for (double a : {0.01, 0.1, 1.0}) {
      const models::ColumnComplex cc = models::column_complex(f, a);
      const models::PieceComplex m = models::build_model(f, a);
      for (int k : {0, 1})
        c.expect(models::betti_grid(cc, k) == models::betti(m, k),
                 std::string(models::to_string(f)) + " a=" + fmt(a) + " k=" + std::to_string(k) + ": grid " +
                     std::to_string(models::betti_grid(cc, k)) + " vs " + std::to_string(models::betti(m, k)));
    }
  return c.out;
}

Outcome theorem_suite() {
  Checker c;
  std::mt19937_64 rng(20240501);
  long scvl_failures = 0, false_steps = 0, hypotheses = 0, deductions = 0;
  for (int t = 0; t < 10000; ++t) {
    const ps::Barcode bc = ps::random_barcode(rng);
    const std::vector<double> pts = ps::arrangement_points(bc);
    const std::size_t n = pts.size();
    for (int k : {0, 1}) {
      std::vector<char> iso(n * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          iso[i * n + j] = ps::is_iso(bc, k, pts[i], pts[j]) ? 1 : 0;
          if (j == i) continue;
          const ps::ScvlReport s = ps::check_scvl(bc, k, pts[i], pts[j]);
          hypotheses += s.hypothesis ? 1 : 0;
          if (!s.holds) ++scvl_failures;
        }
      for (std::size_t a = 0; a + 3 < n; ++a)
        for (std::size_t cc = a + 1; cc + 2 < n; ++cc)
          for (std::size_t b = cc + 1; b + 1 < n; ++b) {
            const std::size_t d = b + 1;
            if (!iso[a * n + b] || !iso[cc * n + d]) continue;
            ++deductions;
            if (!ps::step1_deduce(bc, k, pts[a], pts[cc], pts[b], pts[d])) ++false_steps;
          }
    }
  }
  c.expect(scvl_failures == 0, std::to_string(scvl_failures) + " SCVL implication failures");
  c.expect(false_steps == 0, std::to_string(false_steps) + " false step1_deduce results");
  c.expect(hypotheses > 0 && deductions > 0, "sweep exercised no hypotheses");

  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const ps::Barcode bc({{-1.0, 11.0, false, false, 0}});
    std::vector<ps::IsoInterval> chain;
    double lo = 3.0 * u(rng);
    double hi_max = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double hi = lo + 0.5 + u(rng);
      chain.push_back({lo, hi});
      hi_max = std::max(hi_max, hi);
      lo += (hi - lo) * (0.1 + 0.8 * u(rng));
    }
    const ps::IsoInterval want{chain.front().lo, hi_max};
    std::shuffle(chain.begin(), chain.end(), rng);
    if (!(ps::merge_cover(chain, bc, 0) == want)) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " merge_cover results differ from the union");
  if (c.out.pass)
    c.out.detail = std::to_string(hypotheses) + " SCVL hypotheses, " + std::to_string(deductions) + " step1_deduce calls";
  return c.out;
}

Outcome containment() {
  Checker c;
  std::mt19937_64 rng(20240502);
  std::uniform_int_distribution<std::size_t> pick(0, 1u << 20);
  long critical = 0, exceptions = 0;
  for (int t = 0; t < 100000; ++t) {
    const ps::Barcode bc = ps::random_barcode(rng);
    const std::vector<double> pts = ps::arrangement_points(bc);
    const double v = pts[pick(rng) % pts.size()];
    if (ps::classify_symmetric(bc, v).verdict != ps::Verdict::Critical) continue;
    ++critical;
    if (ps::classify_bs(bc, v).verdict != ps::Verdict::Critical) ++exceptions;
  }
  c.expect(exceptions == 0, std::to_string(exceptions) + " symmetric-critical values are BS-regular");
  c.expect(critical > 0, "no symmetric-critical value sampled");
  if (c.out.pass) c.out.detail = std::to_string(critical) + " symmetric-critical samples";
  return c.out;
}

Outcome appendix() {
  Checker c;
  for (int n = 1; n <= 5; ++n) {
    const fields::PolyPair prev = fields::deriv_polys(n - 1);
    for (double x : {0.3, 0.5, 1.0}) {
      const auto f = [&](double t) { return fields::deriv_eval(prev, t); };
      const double h = x * 1e-5;
      const auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
      const double fd = (4.0 * d(0.5 * h) - d(h)) / 3.0;
      const double exact = fields::deriv_eval(n, x);
      const double rel = std::fabs(fd - exact) / std::fabs(exact);
      c.expect(rel <= 1e-5, "n=" + std::to_string(n) + " x=" + fmt(x) + " relative error " + fmt(rel));
    }
  }
  for (int n = 0; n <= 5; ++n)
    c.expect(std::fabs(fields::deriv_eval(n, 1.0 / 200.0)) < 1e-30, "k^(" + std::to_string(n) + ")(1/200) >= 1e-30");
  return c.out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) throw IoError("cannot read " + p.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Outcome figures() {
  Checker c;
  const cli::PlotGrid grid{0.01, {-3.0, 3.0}, {-3.0, 3.0}};
  const std::filesystem::path dir = std::filesystem::path(CRITVAL_SOURCE_DIR) / "tests" / "golden";
  for (const auto& [a, name] : {std::pair{1.0, "1"}, std::pair{0.01, "0.01"}, std::pair{0.0, "0"}}) {
    const cli::PlotData plot = cli::rasterize(FamilyId::SmoothG, a, grid);
    const std::vector<double> got = cli::path_numbers(cli::render_svg(plot));
    const std::vector<double> want = cli::path_numbers(slurp(dir / (std::string("smooth_g_a") + name + ".svg")));
    bool close = got.size() == want.size();
    for (std::size_t i = 0; close && i < got.size(); ++i) close = std::fabs(got[i] - want[i]) <= grid.dx;
    c.expect(close, std::string("a=") + name + " differs from its golden file");
    if (a == 0.0) {
      c.expect(plot.components.size() == 3, "a=0 plot has " + std::to_string(plot.components.size()) + " components");
      c.expect(plot.bulge && plot.bulge->box.x0 >= 0.5 && plot.bulge->box.x1 <= 1.5,
               "a=0 plot has no bulge marker inside (1/2, 3/2)");
    }
  }
  return c.out;
}

Outcome sphere_pullback() {
  Checker c;
  const fields::SphereCutoff& cut = fields::sphere_cutoff();
  std::mt19937_64 rng(20240503);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  long disagreements = 0, compared = 0, annulus = 0;
  for (double a : {-1e-8, 0.01, 0.5}) {
    for (int i = 0; i < 10000; ++i) {
      // half near the interesting region of the plane, half uniform on the sphere
      Point2 p;
      Vec3 w;
      if (i % 2 == 0) {
        p = {box(rng), box(rng)};
        w = fields::inverse_stereographic(p);
      } else {
        Vec3 g{gauss(rng), gauss(rng), gauss(rng)};
        const double r = std::sqrt(g.x * g.x + g.y * g.y + g.z * g.z);
        w = {g.x / r, g.y / r, g.z / r};
        if (w.z >= 1.0 - 1e-12) continue;
        p = fields::stereographic(w);
      }
      const double radius = std::hypot(p.x, p.y);
      if (radius > cut.inner && radius < cut.outer) {
        ++annulus;
        continue;
      }
      ++compared;
      if ((fields::sphere_h(w) <= a) != (fields::smooth_h(p.x, p.y) <= a)) ++disagreements;
    }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements outside the annulus");
  if (c.out.pass)
    c.out.detail = std::to_string(compared) + " compared, " + std::to_string(annulus) + " in the transition annulus";
  return c.out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {"1 squeeze counterexample", squeeze, 1.0},
      {"2 stacked sine and signed distance", stacked_and_signed_distance, 10.0},
      {"3 smooth family", smooth_family, 1e9},
      {"4 grid/symbolic agreement", grid_agreement, 30.0},
      {"5 theorem suite", theorem_suite, 60.0},
      {"6 classifier containment", containment, 1e9},
      {"7 derivative recurrence", appendix, 5.0},
      {"8 figure reproduction", figures, 1e9},
      {"9 sphere pullback", sphere_pullback, 1e9},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > cr.budget_s) o = {false, "runtime " + fmt(secs) + " s over budget " + fmt(cr.budget_s) + " s"};
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << cr.name << "  (" << fmt(secs) << " s)"
              << (o.detail.empty() ? "" : "  " + o.detail) << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
