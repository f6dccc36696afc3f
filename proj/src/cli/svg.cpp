#include "critval/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "critval/errors.hpp"
#include "critval/fields/trig.hpp"
#include "critval/models/build_model.hpp"

namespace critval::cli {

namespace {

using models::Piece;
using models::PieceKind;
using models::Span;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else if (c == '"')
      out += "&quot;";
    else
      out += c;
  }
  return out;
}

// Abscissa inside both the piece's x-span and the column cell, preferring the
// cell centre; nullopt when they do not meet.
std::optional<double> sample_x(const Piece& p, double x0, double x1) {
  const double centre = 0.5 * (x0 + x1);
  if (p.x.contains(centre)) return centre;
  const double lo = std::max(p.x.lo.value, x0);
  const double hi = std::min(p.x.hi.value, x1);
  if (lo > hi) return std::nullopt;
  for (double t : {0.5 * (lo + hi), lo, hi})
    if (p.x.contains(t) && t >= x0 && t <= x1) return t;
  return std::nullopt;
}

bool has_bulge(models::FamilyId f) {
  return f == models::FamilyId::SmoothG || f == models::FamilyId::SmoothH || f == models::FamilyId::SphereH;
}

std::optional<double> centre_y(const Piece& p, double x, const Span& slice) {
  if (p.profile == models::Profile::DistSlice) return 0.5 * (slice.lo.value + slice.hi.value);
  return fields::sine_curve(x);
}

}  // namespace

PlotData rasterize(models::FamilyId family, double a, const PlotGrid& grid) {
  if (!(grid.dx > 0.0) || grid.x_range.empty() || grid.y_range.empty())
    throw InvalidArgument("plot: bad grid");
  const models::PieceComplex model = models::build_model(family, a);
  if (model.stack_piece()) throw InvalidArgument("plot: the family is not planar");

  PlotData plot;
  plot.family = family;
  plot.level = a;
  plot.grid = grid;
  const double dx = grid.dx;
  const auto n_cols = static_cast<std::size_t>(std::ceil(grid.x_range.length() / dx - 1e-9));
  const auto n_rows = static_cast<std::size_t>(std::ceil(grid.y_range.length() / dx - 1e-9));
  if (n_cols * n_rows > 400'000'000) throw InvalidArgument("plot: grid too fine");
  plot.columns.assign(n_cols, {});

  const auto row_of = [&](double y) {
    const double r = std::floor((y - grid.y_range.lo) / dx);
    return static_cast<std::ptrdiff_t>(std::clamp(r, -1.0, static_cast<double>(n_rows)));
  };
  const auto add_slice = [&](std::size_t col, const Span& s) {
    const double lo = std::max(s.lo.value, grid.y_range.lo);
    const double hi = std::min(s.hi.value, grid.y_range.hi);
    if (lo > hi) return;
    std::ptrdiff_t r0 = row_of(lo);
    std::ptrdiff_t r1 = std::max(r0, static_cast<std::ptrdiff_t>(std::ceil((hi - grid.y_range.lo) / dx)) - 1);
    r0 = std::clamp<std::ptrdiff_t>(r0, 0, static_cast<std::ptrdiff_t>(n_rows) - 1);
    r1 = std::clamp<std::ptrdiff_t>(r1, 0, static_cast<std::ptrdiff_t>(n_rows) - 1);
    plot.columns[col].push_back({static_cast<std::size_t>(r0), static_cast<std::size_t>(r1)});
  };

  const std::vector<std::size_t> comp = model.components();
  std::vector<ComponentStrokes> groups(model.component_count());
  for (std::size_t c = 0; c < groups.size(); ++c) groups[c].component = c;

  for (std::size_t pi = 0; pi < model.pieces.size(); ++pi) {
    const Piece& p = model.pieces[pi];
    Stroke stroke;
    stroke.label = p.label;
    if (p.kind == PieceKind::VSeg) {
      const double x = p.x.lo.value;
      if (x >= grid.x_range.lo && x <= grid.x_range.hi) {
        const auto col = std::min(n_cols - 1, static_cast<std::size_t>((x - grid.x_range.lo) / dx));
        add_slice(col, p.y);
        const double lo = std::max(p.y.lo.value, grid.y_range.lo);
        const double hi = std::min(p.y.hi.value, grid.y_range.hi);
        if (lo <= hi) stroke.polylines.push_back({{x, lo}, {x, hi}});
      }
    } else {
      std::vector<Point2> line;
      for (std::size_t col = 0; col < n_cols; ++col) {
        const double x0 = grid.x_range.lo + static_cast<double>(col) * dx;
        const auto t = sample_x(p, x0, x0 + dx);
        const auto s = t ? p.slice(*t) : std::nullopt;
        if (!s) {
          if (line.size() > 1) stroke.polylines.push_back(line);
          line.clear();
          continue;
        }
        add_slice(col, *s);
        if (p.kind == PieceKind::Tube) {
          const auto y = centre_y(p, *t, *s);
          if (y && *y >= grid.y_range.lo && *y <= grid.y_range.hi)
            line.push_back({*t, *y});
          else if (line.size() > 1) {
            stroke.polylines.push_back(line);
            line.clear();
          } else {
            line.clear();
          }
        }
      }
      if (line.size() > 1) stroke.polylines.push_back(line);
      if (p.kind == PieceKind::Rect) {
        const double x0 = std::max(p.x.lo.value, grid.x_range.lo);
        const double x1 = std::min(p.x.hi.value, grid.x_range.hi);
        const double y0 = std::max(p.y.lo.value, grid.y_range.lo);
        const double y1 = std::min(p.y.hi.value, grid.y_range.hi);
        if (x0 <= x1 && y0 <= y1) stroke.polylines.push_back({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}});
      }
    }
    groups[comp[pi]].strokes.push_back(std::move(stroke));
  }
  plot.components = std::move(groups);

  for (auto& runs : plot.columns) {
    std::sort(runs.begin(), runs.end(), [](const CellRun& l, const CellRun& r) { return l.row_lo < r.row_lo; });
    std::vector<CellRun> merged;
    for (const CellRun& r : runs) {
      if (!merged.empty() && r.row_lo <= merged.back().row_hi + 1)
        merged.back().row_hi = std::max(merged.back().row_hi, r.row_hi);
      else
        merged.push_back(r);
    }
    runs = std::move(merged);
  }

  if (has_bulge(family))
    if (const auto at = model.locate({1.0, 0.0}))
      plot.bulge = BulgeMarker{{0.5, -1.0, 1.5, 1.0}, comp[*at]};
  if (model.empty()) plot.notes.push_back("empty sublevel set");
  return plot;
}

std::string render_svg(const PlotData& plot) {
  const PlotGrid& g = plot.grid;
  const double width = g.x_range.length();
  const double height = g.y_range.length();
  const double px = std::min(100.0, 2000.0 / std::max(width, height));
  const double stroke_w = std::max(g.dx, 0.01);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width * px) << "\" height=\""
     << num(height * px) << "\" viewBox=\"" << num(g.x_range.lo) << ' ' << num(-g.y_range.hi) << ' '
     << num(width) << ' ' << num(height) << "\">\n";
  os << "<desc>" << escape(std::string(models::to_string(plot.family))) << " level=" << num(plot.level)
     << " dx=" << num(g.dx) << " components=" << plot.components.size() << "</desc>\n";
  os << "<rect x=\"" << num(g.x_range.lo) << "\" y=\"" << num(-g.y_range.hi) << "\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  os << "<path class=\"cells\" fill=\"#9ecae1\" stroke=\"none\" d=\"";
  bool first = true;
  for (std::size_t c = 0; c < plot.columns.size(); ++c) {
    const double x0 = g.x_range.lo + static_cast<double>(c) * g.dx;
    for (const CellRun& r : plot.columns[c]) {
      const double y0 = g.y_range.lo + static_cast<double>(r.row_lo) * g.dx;
      const double y1 = g.y_range.lo + static_cast<double>(r.row_hi + 1) * g.dx;
      os << (first ? "" : " ") << 'M' << num(x0) << ' ' << num(y0) << 'H' << num(x0 + g.dx) << 'V' << num(y1)
         << 'H' << num(x0) << 'Z';
      first = false;
    }
  }
  os << "\"/>\n";
  static constexpr const char* kColours[] = {"#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#8c564b"};
  for (const ComponentStrokes& cs : plot.components) {
    os << "<g class=\"component\" data-component=\"" << cs.component << "\" fill=\"none\" stroke=\""
       << kColours[cs.component % 6] << "\" stroke-width=\"" << num(stroke_w) << "\">\n";
    for (const Stroke& s : cs.strokes) {
      if (s.polylines.empty()) continue;
      os << "<path class=\"piece\" data-label=\"" << escape(s.label) << "\" d=\"";
      bool head = true;
      for (const auto& line : s.polylines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
          os << (head ? "" : " ") << (i == 0 ? 'M' : 'L') << num(line[i].x) << ' ' << num(line[i].y);
          head = false;
        }
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  if (plot.bulge) {
    const Box& b = plot.bulge->box;
    os << "<rect class=\"bulge-marker\" data-component=\"" << plot.bulge->component << "\" x=\"" << num(b.x0)
       << "\" y=\"" << num(b.y0) << "\" width=\"" << num(b.x1 - b.x0) << "\" height=\"" << num(b.y1 - b.y0)
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"0.05 0.05\" stroke-width=\"" << num(stroke_w)
       << "\"/>\n";
  }
  os << "</g>\n";
  double y_text = -g.y_range.hi + 0.05 * height;
  for (const std::string& note : plot.notes) {
    os << "<text class=\"note\" x=\"" << num(g.x_range.lo + 0.02 * width) << "\" y=\"" << num(y_text)
       << "\" font-size=\"" << num(0.04 * height) << "\">" << escape(note) << "</text>\n";
    y_text += 0.05 * height;
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<double> path_numbers(const std::string& svg) {
  std::vector<double> out;
  std::size_t pos = 0;
  while ((pos = svg.find(" d=\"", pos)) != std::string::npos) {
    pos += 4;
    const std::size_t end = svg.find('"', pos);
    if (end == std::string::npos) break;
    const std::string d = svg.substr(pos, end - pos);
    const char* p = d.c_str();
    while (*p) {
      if ((*p >= '0' && *p <= '9') || *p == '-' || *p == '+' || *p == '.') {
        char* next = nullptr;
        out.push_back(std::strtod(p, &next));
        p = next;
      } else {
        ++p;
      }
    }
    pos = end;
  }
  return out;
}

}  // namespace critval::cli
