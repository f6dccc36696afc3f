#include "critval/models/section.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critval/errors.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"

namespace critval::models {

namespace {

using Kind = SectionBranch::Kind;

// max over |y| <= 2 of h(x, y): the y^2 term vanishes there and f is largest
// at the end of [-2, 2] farther from sin(pi/x).
double h_max_on_band(double x) {
  if (x == 0.0) return 0.0;
  const double far = 2.0 + std::fabs(fields::sine_curve(x));
  return fields::bump(std::fabs(x)) * far * far + fields::mu(x);
}

bool member(FamilyId family, Point2 p, double a, double tolerance) {
  const auto field = family_info(family).field;
  if (!field) throw UnsupportedLevel(std::string(to_string(family)) + ": no scalar field for section checks");
  if (a == 0.0 || *field == fields::FieldId::SphereH) return fields::in_sublevel(*field, p, a);
  const double xy[2] = {p.x, p.y};
  return fields::eval(*field, xy) <= a + tolerance;
}

Interval default_window(FamilyId family, double a) {
  switch (family) {
    case FamilyId::SignedDist:
      return {-1.5 - std::max(a, 0.0), 1.5 + std::max(a, 0.0)};
    case FamilyId::SmoothH:
    case FamilyId::SphereH: {
      const double t = fields::tau(std::max(a, 0.0) + fields::kExpNeg16);
      return {-t - 0.5, t + 0.5};
    }
    default:
      return {-6.0, 6.0};
  }
}

}  // namespace

double SectionBranch::operator()(double x) const {
  switch (kind) {
    case Kind::Constant:
      return y_lo;
    case Kind::Sine:
      return fields::sine_curve(x);
    case Kind::Linear:
      if (x_hi == x_lo) return y_lo;
      return y_lo + (x - x_lo) / (x_hi - x_lo) * (y_hi - y_lo);
  }
  return 0.0;
}

Interval SectionSpec::domain() const {
  if (branches.empty()) return {1.0, 0.0};
  return {branches.front().x_lo, branches.back().x_hi};
}

double SectionSpec::operator()(double x) const {
  for (const SectionBranch& b : branches)
    if (b.x_lo <= x && x <= b.x_hi) return b(x);
  throw InvalidArgument("SectionSpec: x outside the domain");
}

bool SectionSpec::continuous(double tol) const {
  for (std::size_t i = 0; i + 1 < branches.size(); ++i) {
    const SectionBranch& l = branches[i];
    const SectionBranch& r = branches[i + 1];
    if (l.x_hi != r.x_lo || l.x_lo > l.x_hi) return false;
    if (std::fabs(l(l.x_hi) - r(r.x_lo)) > tol) return false;
  }
  return true;
}

SectionSpec signed_dist_section(double a) {
  if (!(a > 0.0)) throw InvalidArgument("signed_dist_section: level must be positive");
  SectionSpec s;
  if (a >= 1.0) {
    // The axis y = 0 stays within distance 1 of L.
    s.branches.push_back({Kind::Constant, -2.0 - a, 1.0 + a, 0.0, 0.0});
    return s;
  }
  const double top = fields::sine_curve(a);
  s.branches.push_back({Kind::Constant, -2.0 - a, a, top, top});
  s.branches.push_back({Kind::Sine, a, 1.0, 0.0, 0.0});
  s.branches.push_back({Kind::Constant, 1.0, 1.0 + a, 0.0, 0.0});
  return s;
}

TubeConstants h_tube_constants(double a, double step) {
  if (!(a > 0.0) || !(step > 0.0)) throw InvalidArgument("h_tube_constants: need a > 0 and step > 0");
  TubeConstants t;
  for (int side : {-1, 1}) {
    double last = 0.0;
    for (int k = 1;; ++k) {
      const double x = side * k * step;
      if (std::fabs(x) > 2.0 || !(h_max_on_band(x) < a)) break;
      last = x;
    }
    (side < 0 ? t.alpha : t.beta) = last;
  }
  if (!(t.alpha < 0.0 && t.beta > 0.0)) throw InconsistencyError("h_tube_constants: no tube found at this step");
  return t;
}

SectionSpec smooth_h_section(double a, TubeConstants tube) {
  if (!(a > 0.0)) throw InvalidArgument("smooth_h_section: level must be positive");
  if (!(tube.alpha < 0.0 && 0.0 < tube.beta)) throw InvalidArgument("smooth_h_section: need alpha < 0 < beta");
  const double reach = fields::tau(a);
  SectionSpec s;
  s.branches.push_back({Kind::Sine, -reach, tube.alpha, 0.0, 0.0});
  s.branches.push_back(
      {Kind::Linear, tube.alpha, tube.beta, fields::sine_curve(tube.alpha), fields::sine_curve(tube.beta)});
  s.branches.push_back({Kind::Sine, tube.beta, reach, 0.0, 0.0});
  return s;
}

SectionReport section_check(FamilyId family, double a, const SectionSpec& s, std::size_t samples,
                            const SectionCheckOptions& opts) {
  if (samples == 0) throw InvalidArgument("section_check: need at least one sample");
  if (s.branches.empty()) throw InvalidArgument("section_check: empty section");
  SectionReport report;
  report.samples = samples;
  const Interval dom = s.domain();
  const Interval window = opts.y_window.value_or(default_window(family, a));
  const std::size_t every = std::max<std::size_t>(opts.slice_every, 1);
  const std::size_t scan = std::max<std::size_t>(opts.slice_samples, 2);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = samples == 1 ? dom.lo : dom.lo + (dom.hi - dom.lo) * static_cast<double>(i) / (samples - 1);
    bool ok = member(family, {x, s(x)}, a, opts.tolerance);
    if (!ok) ++report.graph_failures;
    if (i % every == 0) {
      ++report.slices_checked;
      int runs = 0;
      bool previous = false;
      for (std::size_t j = 0; j < scan; ++j) {
        const double y = window.lo + (window.hi - window.lo) * static_cast<double>(j) / (scan - 1);
        const bool in = member(family, {x, y}, a, opts.tolerance);
        if (in && !previous) ++runs;
        previous = in;
      }
      if (runs > 1) {
        ++report.slice_failures;
        ok = false;
      }
    }
    if (!ok && !report.first_failure_x) report.first_failure_x = x;
  }
  report.certified = s.continuous() && report.graph_failures == 0 && report.slice_failures == 0;
  return report;
}

Interval interval_union(const std::function<double(double)>& lower, const std::function<double(double)>& upper,
                        Interval domain, std::size_t samples) {
  if (samples == 0 || domain.empty()) throw InvalidArgument("interval_union: need samples > 0 and a domain");
  std::vector<Interval> pieces;
  pieces.reserve(samples);
  std::vector<double> jumps;
  for (std::size_t i = 0; i < samples; ++i) {
    const double w =
        samples == 1 ? domain.lo : domain.lo + (domain.hi - domain.lo) * static_cast<double>(i) / (samples - 1);
    const Interval iv{lower(w), upper(w)};
    if (!(iv.lo <= iv.hi)) throw PreconditionViolation("interval_union: lower > upper at w = " + std::to_string(w));
    if (!pieces.empty())
      jumps.push_back(std::max(std::fabs(iv.lo - pieces.back().lo), std::fabs(iv.hi - pieces.back().hi)));
    pieces.push_back(iv);
  }
  double resolution = 0.0;
  if (!jumps.empty()) {
    auto mid = jumps.begin() + static_cast<std::ptrdiff_t>(jumps.size() / 2);
    std::nth_element(jumps.begin(), mid, jumps.end());
    resolution = 4.0 * *mid;
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  double reach = pieces.front().hi;
  for (const Interval& iv : pieces) {
    if (iv.lo > reach + resolution)
      throw InconsistencyError("interval_union: gap between " + std::to_string(reach) + " and " +
                               std::to_string(iv.lo));
    reach = std::max(reach, iv.hi);
  }
  return {pieces.front().lo, reach};
}

}  // namespace critval::models
