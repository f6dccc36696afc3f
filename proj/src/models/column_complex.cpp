#include "critval/models/column_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "critval/errors.hpp"
#include "critval/fields/scalar_fields.hpp"
#include "critval/fields/trig.hpp"
#include "critval/models/piece.hpp"

namespace critval::models {

namespace {

std::optional<Interval> clip(std::optional<Interval> iv, const Interval& window) {
  if (!iv) return std::nullopt;
  const Interval c{std::max(iv->lo, window.lo), std::min(iv->hi, window.hi)};
  if (c.empty()) return std::nullopt;
  return c;
}

std::optional<Interval> tube_slice(FamilyId family, double x, double a) {
  const double s = fields::sine_curve(x);
  switch (family) {
    case FamilyId::SmoothF: {
      const double w = fields::f_half_width(x, a);
      return Interval{s - w, s + w};
    }
    case FamilyId::SmoothG: {
      const auto w = fields::g_half_width(x, a);
      if (!w) return std::nullopt;
      return Interval{s - *w, s + *w};
    }
    case FamilyId::SmoothH:
      return h_slice(x, a);
    default:
      break;
  }
  throw UnsupportedLevel("column_complex: not a tube family");
}

std::optional<Interval> signed_dist_cells(double x, double a) {
  if (a > 0.0) return dist_slice(x, a);
  if (x < -2.0 - a || x > a) return std::nullopt;
  return Interval{-1.0 - a, 1.0 + a};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t ColumnComplex::cell_count() const {
  std::size_t n = 0;
  for (const Column& c : columns) n += c.cells.size();
  return n;
}

void ColumnComplex::check() const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0 && !(columns[i - 1].x < columns[i].x))
      throw InconsistencyError("ColumnComplex: x-grid not strictly increasing");
    const auto& cells = columns[i].cells;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j].empty()) throw InconsistencyError("ColumnComplex: empty cell");
      if (j > 0 && !(cells[j - 1].hi < cells[j].lo))
        throw InconsistencyError("ColumnComplex: cells not disjoint and sorted");
    }
  }
}

ColumnComplex column_complex(FamilyId family, double a, const GridSpec& grid) {
  const FamilyInfo& info = family_info(family);
  if (!(grid.dx > 0.0) || grid.x_range.empty() || grid.y_window.empty() || !(grid.x_cut > 0.0))
    throw InvalidArgument("column_complex: malformed grid");
  const bool tube = info.tube_family;
  if (!tube && family != FamilyId::SignedDist)
    throw UnsupportedLevel(std::string(to_string(family)) + ": no numeric column model");
  if (tube && !(a > 0.0)) throw UnsupportedLevel("column_complex: tube families need a > 0");
  if (family == FamilyId::SignedDist && a == 0.0) throw UnsupportedLevel("column_complex: SIGNED_DIST at a = 0");

  ColumnComplex cc;
  cc.family = family;
  cc.level = a;
  cc.glue_symbolic = tube;
  const auto steps = static_cast<std::size_t>(std::floor((grid.x_range.hi - grid.x_range.lo) / grid.dx + 1e-9));
  bool symbolic_done = false;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double x = grid.x_range.lo + static_cast<double>(i) * grid.dx;
    if (tube && std::fabs(x) < grid.x_cut) {
      if (symbolic_done) continue;
      symbolic_done = true;
      Column c{0.0, {}, true};
      Interval segment = grid.y_window;
      if (family == FamilyId::SmoothH) segment = {-fields::tau(a), fields::tau(a)};
      if (const auto cell = clip(segment, grid.y_window)) c.cells.push_back(*cell);
      cc.columns.push_back(std::move(c));
      continue;
    }
    Column c{x, {}, false};
    const auto slice = tube ? tube_slice(family, x, a) : signed_dist_cells(x, a);
    if (const auto cell = clip(slice, grid.y_window)) c.cells.push_back(*cell);
    cc.columns.push_back(std::move(c));
  }
  cc.check();
  return cc;
}

std::vector<GridEdge> grid_adjacency(const ColumnComplex& cc) {
  std::vector<GridEdge> edges;
  std::size_t base = 0;
  for (std::size_t i = 0; i + 1 < cc.columns.size(); ++i) {
    const Column& l = cc.columns[i];
    const Column& r = cc.columns[i + 1];
    const std::size_t next = base + l.cells.size();
    const bool touches_symbolic = l.symbolic || r.symbolic;
    if (!touches_symbolic || cc.glue_symbolic) {
      for (std::size_t p = 0; p < l.cells.size(); ++p)
        for (std::size_t q = 0; q < r.cells.size(); ++q)
          if (l.cells[p].overlaps(r.cells[q])) edges.push_back({base + p, next + q});
    }
    base = next;
  }
  return edges;
}

int betti_grid(const ColumnComplex& cc, int k) {
  if (k != 0 && k != 1) throw InvalidArgument("betti_grid: degree must be 0 or 1");
  const std::size_t n = cc.cell_count();
  const auto edges = grid_adjacency(cc);
  UnionFind uf(n);
  for (const GridEdge& e : edges) uf.unite(e.a, e.b);
  int components = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (uf.find(i) == i) ++components;
  if (k == 0) return components;
  return static_cast<int>(edges.size()) - static_cast<int>(n) + components;
}

}  // namespace critval::models
