#pragma once

#include <vector>

#include "critval/persistence/barcode.hpp"

namespace critval::persistence {

// Degree-k check of "no symmetric critical value in [x, y] => X_x -> X_y is an
// isomorphism". violation = hypothesis && !conclusion.
struct CvlReport {
  int degree = 0;
  double x = 0.0;
  double y = 0.0;
  bool hypothesis = false;
  std::vector<double> critical_values;  // symmetric-critical values in [x, y]
  int rank = 0;
  int dim_x = 0;
  int dim_y = 0;
  bool conclusion = false;
  bool violation = false;
};
CvlReport check_cvl(const Barcode& bc, int k, double x, double y);

// Degree-k check of "no symmetric critical value in [x, y) => X_x^- -> X_y^-
// is an isomorphism". holds = !hypothesis || conclusion is a theorem.
struct ScvlReport {
  int degree = 0;
  double x = 0.0;
  double y = 0.0;
  bool hypothesis = false;
  std::vector<double> critical_values;  // symmetric-critical values in [x, y)
  int rank = 0;
  int dim_x = 0;
  int dim_y = 0;
  bool conclusion = false;
  bool holds = true;
};
ScvlReport check_scvl(const Barcode& bc, int k, double x, double y);

// Modes of the inclusions X_a^source -> X_b^target and X_c^source -> X_d^target.
struct InclusionKind {
  Mode source = Mode::Closed;
  Mode target = Mode::Closed;
};

// For a < c < b < d with a->b and c->d isomorphisms (PreconditionViolation
// otherwise), reports whether a->c, c->b and b->d are isomorphisms; true
// whenever the precondition holds.
bool step1_deduce(const Barcode& bc, int k, double a, double c, double b, double d, InclusionKind kind = {});

// Open interval (lo, hi), lo < hi, whose closure carries isomorphisms.
struct IsoInterval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const IsoInterval&, const IsoInterval&) = default;
};

struct MergeStats {
  int discarded = 0;  // contained in another interval
  int merged = 0;     // joined through step1_deduce
};

// Repeatedly takes the first overlapping pair, drops a contained interval or
// replaces an overlapping pair by its union, until one interval remains, and
// re-verifies its certificate. PreconditionViolation if an input is not
// certified or the union is disconnected; InconsistencyError if a merge fails.
IsoInterval merge_cover(std::vector<IsoInterval> intervals, const Barcode& bc, int k, MergeStats* stats = nullptr);

// X_e -> X_hfs^- checked at a sampled e in (0, hfs) for one degree.
struct CorollaryCheck {
  int degree = 0;
  double epsilon = 0.0;
  int rank = 0;
  int dim_closed = 0;  // at epsilon
  int dim_open = 0;    // at hfs
  bool pass = false;
};

struct HfsReport {
  double value = kInf;  // infimum of positive critical values
  std::vector<CorollaryCheck> checks;
  bool corollary_holds = true;
};

// PreconditionViolation if some bar is born below 0.
HfsReport hfs(const Barcode& bc);

}  // namespace critval::persistence
