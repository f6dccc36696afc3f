#include "critval/persistence/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critval/errors.hpp"
#include "critval/persistence/criticality.hpp"

namespace critval::persistence {

namespace {

std::vector<double> symmetric_critical_in(const Barcode& bc, int k, double x, double y, bool include_y) {
  std::vector<double> out;
  const std::vector<double> all = bc.endpoints();
  for (double e : bc.endpoints(k)) {
    if (e < x || e > y || (e == y && !include_y)) continue;
    if (classify_symmetric(bc, e, k, zone_radius(all, e)).verdict == Verdict::Critical) out.push_back(e);
  }
  return out;
}

std::string interval_text(IsoInterval iv) {
  return "(" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + ")";
}

}  // namespace

CvlReport check_cvl(const Barcode& bc, int k, double x, double y) {
  if (!(x <= y)) throw InvalidArgument("check_cvl: need x <= y");
  CvlReport r;
  r.degree = k;
  r.x = x;
  r.y = y;
  r.critical_values = symmetric_critical_in(bc, k, x, y, true);
  r.hypothesis = r.critical_values.empty();
  r.rank = rank(bc, k, x, y);
  r.dim_x = dim_at(bc, k, x, Mode::Closed);
  r.dim_y = dim_at(bc, k, y, Mode::Closed);
  r.conclusion = r.rank == r.dim_x && r.rank == r.dim_y;
  r.violation = r.hypothesis && !r.conclusion;
  return r;
}

ScvlReport check_scvl(const Barcode& bc, int k, double x, double y) {
  if (!(x < y)) throw InvalidArgument("check_scvl: need x < y");
  ScvlReport r;
  r.degree = k;
  r.x = x;
  r.y = y;
  r.critical_values = symmetric_critical_in(bc, k, x, y, false);
  r.hypothesis = r.critical_values.empty();
  r.rank = rank(bc, k, x, y, Mode::Open);
  r.dim_x = dim_at(bc, k, x, Mode::Open);
  r.dim_y = dim_at(bc, k, y, Mode::Open);
  r.conclusion = r.rank == r.dim_x && r.rank == r.dim_y;
  r.holds = !r.hypothesis || r.conclusion;
  return r;
}

bool step1_deduce(const Barcode& bc, int k, double a, double c, double b, double d, InclusionKind kind) {
  if (!(a < c && c < b && b < d)) throw InvalidArgument("step1_deduce: need a < c < b < d");
  if (!is_iso(bc, k, a, b, kind.source, kind.target) || !is_iso(bc, k, c, d, kind.source, kind.target))
    throw PreconditionViolation("step1_deduce: the given inclusions are not isomorphisms");
  return is_iso(bc, k, a, c, kind.source, kind.source) && is_iso(bc, k, c, b, kind.source, kind.target) &&
         is_iso(bc, k, b, d, kind.target, kind.target);
}

IsoInterval merge_cover(std::vector<IsoInterval> intervals, const Barcode& bc, int k, MergeStats* stats) {
  if (intervals.empty()) throw PreconditionViolation("merge_cover: empty cover");
  for (const IsoInterval& iv : intervals) {
    if (!(iv.lo < iv.hi)) throw InvalidArgument("merge_cover: interval " + interval_text(iv) + " is empty");
    if (!is_iso(bc, k, iv.lo, iv.hi))
      throw PreconditionViolation("merge_cover: interval " + interval_text(iv) + " is not certified");
  }
  MergeStats local;
  while (intervals.size() > 1) {
    bool progressed = false;
    for (std::size_t i = 0; i < intervals.size() && !progressed; ++i) {
      for (std::size_t j = i + 1; j < intervals.size() && !progressed; ++j) {
        IsoInterval p = intervals[i];
        IsoInterval q = intervals[j];
        if (!(std::max(p.lo, q.lo) < std::min(p.hi, q.hi))) continue;
        progressed = true;
        if (p.lo <= q.lo && q.hi <= p.hi) {
          intervals.erase(intervals.begin() + static_cast<std::ptrdiff_t>(j));
          ++local.discarded;
        } else if (q.lo <= p.lo && p.hi <= q.hi) {
          intervals.erase(intervals.begin() + static_cast<std::ptrdiff_t>(i));
          ++local.discarded;
        } else {
          if (q.lo < p.lo) std::swap(p, q);
          if (!step1_deduce(bc, k, p.lo, q.lo, p.hi, q.hi))
            throw InconsistencyError("merge_cover: step1_deduce failed on " + interval_text(p) + " and " +
                                     interval_text(q));
          intervals[i] = {p.lo, q.hi};
          intervals.erase(intervals.begin() + static_cast<std::ptrdiff_t>(j));
          ++local.merged;
        }
      }
    }
    if (!progressed) throw PreconditionViolation("merge_cover: the union of the cover is disconnected");
  }
  const IsoInterval out = intervals.front();
  if (!is_iso(bc, k, out.lo, out.hi))
    throw InconsistencyError("merge_cover: merged interval " + interval_text(out) + " is not an isomorphism");
  if (stats) *stats = local;
  return out;
}

HfsReport hfs(const Barcode& bc) {
  for (const DecoratedBar& b : bc.bars)
    if (b.birth < 0.0) throw PreconditionViolation("hfs: bar born below 0");
  HfsReport r;
  for (double e : bc.endpoints()) {
    if (e > 0.0 && classify_bs(bc, e).verdict == Verdict::Critical) {
      r.value = e;
      break;
    }
  }
  const std::vector<double> eps = std::isfinite(r.value)
                                      ? std::vector<double>{0.25 * r.value, 0.5 * r.value, 0.75 * r.value}
                                      : std::vector<double>{0.5, 1.0, 2.0};
  for (int k : bc.degrees()) {
    for (double e : eps) {
      CorollaryCheck c{k, e, rank(bc, k, e, r.value, Mode::Closed, Mode::Open), dim_at(bc, k, e, Mode::Closed),
                       dim_at(bc, k, r.value, Mode::Open), false};
      c.pass = c.rank == c.dim_closed && c.rank == c.dim_open;
      r.corollary_holds = r.corollary_holds && c.pass;
      r.checks.push_back(c);
    }
  }
  return r;
}

}  // namespace critval::persistence
