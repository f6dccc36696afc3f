#include "critval/models/serialize.hpp"

#include <cmath>
#include <string>

#include "critval/errors.hpp"

namespace critval::models {

using nlohmann::json;

json number_to_json(double v) {
  if (std::isnan(v)) throw InvalidArgument("number_to_json: NaN");
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw InvalidArgument("number_from_json: expected a number or \"inf\"/\"-inf\"");
}

json span_to_json(const Span& s) {
  return {{"lo", number_to_json(s.lo.value)},
          {"hi", number_to_json(s.hi.value)},
          {"loClosed", s.lo.closed},
          {"hiClosed", s.hi.closed}};
}

namespace {

json tag_to_json(const LimitTag& t) {
  switch (t.kind) {
    case LimitTag::Kind::None:
      return {{"kind", "NONE"}};
    case LimitTag::Kind::Converges:
      return {{"kind", "CONVERGES"}, {"point", {number_to_json(t.point.x), number_to_json(t.point.y)}}};
    case LimitTag::Kind::Oscillates:
      return {{"kind", "OSCILLATES"}, {"lower", t.lower}, {"upper", t.upper}};
  }
  return nullptr;
}

std::string branch_kind(SectionBranch::Kind k) {
  switch (k) {
    case SectionBranch::Kind::Constant:
      return "constant";
    case SectionBranch::Kind::Sine:
      return "sine";
    case SectionBranch::Kind::Linear:
      return "linear";
  }
  return "?";
}

}  // namespace

json to_json(const SectionSpec& s) {
  json branches = json::array();
  for (const SectionBranch& b : s.branches)
    branches.push_back({{"kind", branch_kind(b.kind)},
                        {"xLo", number_to_json(b.x_lo)},
                        {"xHi", number_to_json(b.x_hi)},
                        {"yLo", b.y_lo},
                        {"yHi", b.y_hi}});
  return {{"branches", branches}};
}

json to_json(const PieceComplex& m) {
  json pieces = json::array();
  for (const Piece& p : m.pieces) {
    json j = {{"kind", to_string(p.kind)},
              {"label", p.label},
              {"anchor", {number_to_json(p.anchor.x), number_to_json(p.anchor.y)}},
              {"genus", p.genus}};
    if (p.kind == PieceKind::Stack) {
      j["heights"] = {p.heights.lo, p.heights.hi};
    } else {
      j["x"] = span_to_json(p.x);
      if (p.kind == PieceKind::Tube) {
        j["profile"] = to_string(p.profile);
        j["level"] = p.level;
        j["left"] = tag_to_json(p.left);
        j["right"] = tag_to_json(p.right);
      } else {
        j["y"] = span_to_json(p.y);
      }
    }
    pieces.push_back(std::move(j));
  }
  json adjacency = json::array();
  for (const auto& [i, k] : m.adjacency) adjacency.push_back({i, k});
  json out = {{"family", to_string(m.family)},
              {"level", m.level},
              {"pieces", pieces},
              {"adjacency", adjacency},
              {"components", m.components()},
              {"betti", {{"0", betti(m, 0)}, {"1", betti(m, 1)}}}};
  if (m.section) out["section"] = to_json(*m.section);
  return out;
}

json to_json(const ColumnComplex& cc) {
  json columns = json::array();
  for (const Column& c : cc.columns) {
    json cells = json::array();
    for (const Interval& iv : c.cells) cells.push_back({iv.lo, iv.hi});
    columns.push_back({{"x", c.x}, {"symbolic", c.symbolic}, {"cells", cells}});
  }
  return {{"family", to_string(cc.family)},
          {"level", cc.level},
          {"glueSymbolic", cc.glue_symbolic},
          {"columns", columns},
          {"betti", {{"0", betti_grid(cc, 0)}, {"1", betti_grid(cc, 1)}}}};
}

}  // namespace critval::models
