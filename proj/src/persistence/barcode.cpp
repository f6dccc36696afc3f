#include "critval/persistence/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "critval/errors.hpp"

namespace critval::persistence {

namespace {

bool present(const DecoratedBar& bar, double t, Mode mode) {
  return mode == Mode::Closed ? bar.contains(t) : bar.contains_left_of(t);
}

}  // namespace

bool DecoratedBar::contains(double t) const {
  const bool after = birth_closed ? t >= birth : t > birth;
  const bool before = death_closed ? t <= death : t < death;
  return after && before;
}

void validate(const DecoratedBar& bar) {
  if (std::isnan(bar.birth) || std::isnan(bar.death)) throw InvalidArgument("bar: NaN endpoint");
  if (bar.degree < 0) throw InvalidArgument("bar: negative degree");
  if (!(bar.birth <= bar.death)) throw InvalidArgument("bar: birth > death");
  if (bar.birth == kInf || bar.death == -kInf) throw InvalidArgument("bar: empty at infinity");
  if (std::isinf(bar.birth) && bar.birth_closed) throw InvalidArgument("bar: infinite birth must be open");
  if (std::isinf(bar.death) && bar.death_closed) throw InvalidArgument("bar: infinite death must be open");
  if (bar.singleton() && !(bar.birth_closed && bar.death_closed))
    throw InvalidArgument("bar: a singleton must be closed at both ends");
}

DecoratedBar closed_bar(double birth, double death, int degree) {
  DecoratedBar b{birth, death, true, true, degree};
  validate(b);
  return b;
}

DecoratedBar half_open_bar(double birth, double death, int degree) {
  DecoratedBar b{birth, death, std::isfinite(birth), false, degree};
  validate(b);
  return b;
}

DecoratedBar singleton_bar(double at, int degree) { return closed_bar(at, at, degree); }

Barcode::Barcode(std::vector<DecoratedBar> b, std::string l) : bars(std::move(b)), label(std::move(l)) {
  for (const DecoratedBar& bar : bars) validate(bar);
}

namespace {

std::vector<double> finite_endpoints(const std::vector<DecoratedBar>& bars, int k, bool all) {
  std::vector<double> e;
  e.reserve(2 * bars.size());
  for (const DecoratedBar& b : bars)
    if (all || b.degree == k)
      for (double t : {b.birth, b.death})
        if (std::isfinite(t)) e.push_back(t);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

}  // namespace

std::vector<double> Barcode::endpoints() const { return finite_endpoints(bars, 0, true); }

std::vector<double> Barcode::endpoints(int k) const { return finite_endpoints(bars, k, false); }

std::vector<int> Barcode::degrees() const {
  std::set<int> d;
  for (const DecoratedBar& b : bars) d.insert(b.degree);
  return {d.begin(), d.end()};
}

std::vector<DecoratedBar> Barcode::sorted_bars() const {
  auto out = bars;
  std::sort(out.begin(), out.end(), [](const DecoratedBar& l, const DecoratedBar& r) {
    return std::tuple(l.degree, l.birth, !l.birth_closed, l.death, l.death_closed) <
           std::tuple(r.degree, r.birth, !r.birth_closed, r.death, r.death_closed);
  });
  return out;
}

int dim_at(const Barcode& bc, int k, double a, Mode mode) {
  int n = 0;
  for (const DecoratedBar& b : bc.bars)
    if (b.degree == k && present(b, a, mode)) ++n;
  return n;
}

int rank(const Barcode& bc, int k, double a, double b, Mode source, Mode target) {
  if (!(a <= b)) throw InvalidArgument("rank: need a <= b");
  if (a == b && source == Mode::Closed && target == Mode::Open)
    throw InvalidArgument("rank: the closed sublevel set at a is not contained in the open one at a");
  int n = 0;
  for (const DecoratedBar& bar : bc.bars)
    if (bar.degree == k && present(bar, a, source) && present(bar, b, target)) ++n;
  return n;
}

bool is_iso(const Barcode& bc, int k, double a, double b, Mode source, Mode target) {
  const int r = rank(bc, k, a, b, source, target);
  return r == dim_at(bc, k, a, source) && r == dim_at(bc, k, b, target);
}

}  // namespace critval::persistence
