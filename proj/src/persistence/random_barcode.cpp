#include "critval/persistence/random_barcode.hpp"

#include <cmath>
#include <string>

#include "critval/errors.hpp"

namespace critval::persistence {

namespace {

DecoratedBar decorated(std::mt19937_64& rng, double birth, double death, int degree) {
  std::bernoulli_distribution coin(0.5);
  DecoratedBar b{birth, death, coin(rng), coin(rng), degree};
  if (std::isinf(death)) b.death_closed = false;
  return b;
}

}  // namespace

Barcode random_barcode(std::mt19937_64& rng, const RandomBarcodeOptions& opts) {
  if (!(opts.p > 0.0 && opts.p <= 1.0) || !(opts.lattice > 0.0) || !(opts.lo < opts.hi) || opts.max_degree < 0)
    throw InvalidArgument("random_barcode: bad options");
  const auto steps = static_cast<long>(std::floor((opts.hi - opts.lo) / opts.lattice + 1e-9));
  std::geometric_distribution<int> count(opts.p);
  std::uniform_int_distribution<long> point(0, steps);
  std::uniform_int_distribution<int> degree(0, opts.max_degree);
  std::bernoulli_distribution singleton(opts.singleton_probability);
  std::bernoulli_distribution infinite(opts.infinite_probability);
  const auto lattice_point = [&] { return opts.lo + static_cast<double>(point(rng)) * opts.lattice; };

  Barcode bc;
  bc.label = "random";
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int k = degree(rng);
    if (singleton(rng)) {
      bc.bars.push_back(singleton_bar(lattice_point(), k));
      continue;
    }
    double b = lattice_point();
    double d = lattice_point();
    if (infinite(rng)) {
      bc.bars.push_back(decorated(rng, b, kInf, k));
      continue;
    }
    while (d == b) d = lattice_point();
    if (d < b) std::swap(b, d);
    bc.bars.push_back(decorated(rng, b, d, k));
  }
  for (const DecoratedBar& bar : bc.bars) validate(bar);
  return bc;
}

Barcode accumulating_barcode(std::mt19937_64& rng, int n_max) {
  if (n_max < 2) throw InvalidArgument("accumulating_barcode: need n_max >= 2");
  std::uniform_int_distribution<int> kind(0, 2);
  std::bernoulli_distribution coin(0.5);
  Barcode bc;
  bc.label = "accumulating/" + std::to_string(n_max);
  for (int n = 1; n < n_max; ++n) {
    const double hi = 1.0 / n;
    const double lo = 1.0 / (n + 1);
    switch (kind(rng)) {
      case 0:
        bc.bars.push_back(singleton_bar(hi, coin(rng) ? 0 : 1));
        break;
      case 1:
        bc.bars.push_back(decorated(rng, lo, hi, coin(rng) ? 0 : 1));
        break;
      default:
        break;
    }
  }
  bc.bars.push_back(decorated(rng, 0.0, kInf, 0));
  for (const DecoratedBar& bar : bc.bars) validate(bar);
  return bc;
}

std::vector<double> arrangement_points(const Barcode& bc) {
  const std::vector<double> e = bc.endpoints();
  if (e.empty()) return {0.0};
  const double beyond = e.size() > 1 ? 0.5 * (e.back() - e.front()) : 1.0;
  std::vector<double> out{e.front() - beyond};
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.push_back(e[i]);
    if (i + 1 < e.size()) out.push_back(0.5 * (e[i] + e[i + 1]));
  }
  out.push_back(e.back() + beyond);
  return out;
}

}  // namespace critval::persistence
