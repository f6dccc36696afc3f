#include "critval/models/piece_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "critval/errors.hpp"

namespace critval::models {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

const LimitTag* open_end_tag(const Piece& p, double c) {
  if (p.x.lo.value == c && !p.x.lo.closed) return &p.left;
  if (p.x.hi.value == c && !p.x.hi.closed) return &p.right;
  return nullptr;
}

bool glued_through_tag(const Piece& p, const Piece& q, double c) {
  const LimitTag* tag = open_end_tag(p, c);
  if (!tag || !q.x.contains(c)) return false;
  return tag->kind == LimitTag::Kind::Converges && tag->point.x == c && q.contains(tag->point);
}

bool glued(const Piece& p, const Piece& q) {
  std::set<double> candidates;
  for (const Piece* r : {&p, &q})
    for (double c : {r->x.lo.value, r->x.hi.value})
      if (std::isfinite(c)) candidates.insert(c);
  for (double c : candidates) {
    if (p.x.contains(c) && q.x.contains(c)) {
      const auto sp = p.slice(c);
      const auto sq = q.slice(c);
      if (sp && sq && sp->meets(*sq)) return true;
    }
    if (glued_through_tag(p, q, c) || glued_through_tag(q, p, c)) return true;
  }
  return false;
}

}  // namespace

std::vector<Edge> derive_adjacency(const std::vector<Piece>& pieces) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& p = pieces[i];
      const Piece& q = pieces[j];
      const bool p_stack = p.kind == PieceKind::Stack;
      const bool q_stack = q.kind == PieceKind::Stack;
      if (p_stack && q_stack) throw InconsistencyError("derive_adjacency: at most one STACK piece");
      if (p_stack || q_stack) {
        const Piece& stack = p_stack ? p : q;
        const Piece& planar = p_stack ? q : p;
        if (planar.contains(stack.anchor)) edges.emplace_back(i, j);
        continue;
      }
      const double lo = std::max(p.x.lo.value, q.x.lo.value);
      const double hi = std::min(p.x.hi.value, q.x.hi.value);
      if (lo < hi) throw InconsistencyError("derive_adjacency: pieces " + p.label + " and " + q.label + " overlap");
      if (glued(p, q)) edges.emplace_back(i, j);
    }
  return edges;
}

std::vector<std::size_t> PieceComplex::components() const {
  UnionFind uf(pieces.size());
  for (const auto& [i, j] : adjacency) uf.unite(i, j);
  std::vector<std::size_t> label(pieces.size());
  std::vector<std::size_t> root_label(pieces.size(), pieces.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == pieces.size()) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

std::size_t PieceComplex::component_count() const {
  const auto label = components();
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

std::optional<std::size_t> PieceComplex::locate(Point2 p) const {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].contains(p)) return i;
  return std::nullopt;
}

std::optional<std::size_t> PieceComplex::stack_piece() const {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].kind == PieceKind::Stack) return i;
  return std::nullopt;
}

int betti(const PieceComplex& model, int k) {
  if (k != 0 && k != 1) throw InvalidArgument("betti: degree must be 0 or 1");
  const auto c = static_cast<int>(model.component_count());
  if (k == 0) return c;
  int genus = 0;
  for (const Piece& p : model.pieces) genus += p.genus;
  const auto e = static_cast<int>(model.adjacency.size());
  const auto v = static_cast<int>(model.pieces.size());
  return e - v + c + genus;
}

}  // namespace critval::models
