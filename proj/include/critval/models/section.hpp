#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "critval/fields/geometry.hpp"
#include "critval/models/family.hpp"

namespace critval::models {

// One branch of a piecewise section s on [x_lo, x_hi].
struct SectionBranch {
  enum class Kind { Constant, Sine, Linear };
  Kind kind = Kind::Constant;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;  // Constant: the value; Linear: s(x_lo)
  double y_hi = 0.0;  // Linear: s(x_hi)

  double operator()(double x) const;
};

// Continuous piecewise section; branches are sorted and consecutive branches
// share their breakpoint.
struct SectionSpec {
  std::vector<SectionBranch> branches;

  Interval domain() const;
  double operator()(double x) const;
  // Adjacent branches agree at shared breakpoints within tol, and the
  // breakpoints chain without gaps.
  bool continuous(double tol = 1e-12) const;
};

// s = sin(pi/a) left of a, sin(pi/x) on [a, 1], 0 right of 1; on [-2-a, 1+a].
SectionSpec signed_dist_section(double a);

// Interval (alpha, beta) around 0 on which h < a on [alpha, beta] x [-2, 2].
struct TubeConstants {
  double alpha = 0.0;
  double beta = 0.0;
};
// Widest grid interval (step `step`) around 0 with max_{|y| <= 2} h(x, y) < a.
TubeConstants h_tube_constants(double a, double step = 1e-4);
// sin(pi/x) off (alpha, beta), the chord between the two sine values on it;
// defined on the x-extent of {h <= a}.
SectionSpec smooth_h_section(double a, TubeConstants tube);

struct SectionCheckOptions {
  double tolerance = 1e-12;    // membership slack for rounding in the field
  std::size_t slice_every = 20;  // scan the vertical slice at every n-th sample
  std::size_t slice_samples = 300;
  // y-window scanned for slices; defaults per family when unset.
  std::optional<Interval> y_window;
};

struct SectionReport {
  bool certified = false;
  std::size_t samples = 0;
  std::size_t graph_failures = 0;  // sampled (x, s(x)) outside the sublevel set
  std::size_t slices_checked = 0;
  std::size_t slice_failures = 0;  // scanned slices with more than one run
  std::optional<double> first_failure_x;
};

// Samples the graph of s at `samples` equally spaced abscissae of its domain
// and checks it lies in the sublevel set at level a, and that the scanned
// vertical slices are single intervals. Families without a scalar field are
// rejected with UnsupportedLevel.
SectionReport section_check(FamilyId family, double a, const SectionSpec& s, std::size_t samples,
                            const SectionCheckOptions& opts = {});

// [min lower, max upper] over `samples` equally spaced points of domain.
// Throws PreconditionViolation if lower > upper at a sample and
// InconsistencyError if the sampled intervals leave a gap wider than the
// sampling resolution, taken as four times the median jump of (lower, upper)
// between neighbouring samples; an isolated jump is thereby reported.
Interval interval_union(const std::function<double(double)>& lower, const std::function<double(double)>& upper,
                        Interval domain, std::size_t samples);

}  // namespace critval::models
