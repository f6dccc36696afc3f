#include "critval/persistence/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace critval::persistence {

namespace {

std::optional<MapWitness> non_iso(const Barcode& bc, int k, double x, double y) {
  const MapWitness w{k, x, y, rank(bc, k, x, y), dim_at(bc, k, x, Mode::Closed), dim_at(bc, k, y, Mode::Closed)};
  if (w.rank == w.dim_x && w.rank == w.dim_y) return std::nullopt;
  return w;
}

template <class PerDegree>
Classification over_degrees(const Barcode& bc, double a, PerDegree per_degree) {
  Classification out{Verdict::Regular, zone_radius(bc, a), std::nullopt};
  for (int k : bc.degrees()) {
    Classification c = per_degree(bc, a, k);
    if (c.verdict == Verdict::Critical) return c;
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Regular ? "regular" : "critical"; }

double zone_radius(const Barcode& bc, double a) { return zone_radius(bc.endpoints(), a); }

double zone_radius(const std::vector<double>& endpoints, double a) {
  double nearest = kInf;
  const auto it = std::lower_bound(endpoints.begin(), endpoints.end(), a);
  if (it != endpoints.end()) {
    const auto above = *it == a ? std::next(it) : it;
    if (above != endpoints.end()) nearest = *above - a;
  }
  if (it != endpoints.begin()) nearest = std::min(nearest, a - *std::prev(it));
  return std::isfinite(nearest) ? 0.5 * nearest : 1.0;
}

Classification classify_symmetric(const Barcode& bc, double a, int k) {
  return classify_symmetric(bc, a, k, zone_radius(bc, a));
}

Classification classify_symmetric(const Barcode& bc, double a, int k, double e) {
  Classification out{Verdict::Regular, e, non_iso(bc, k, a - e, a + e)};
  if (out.witness) out.verdict = Verdict::Critical;
  return out;
}

Classification classify_bs(const Barcode& bc, double a, int k) {
  const double e = zone_radius(bc, a);
  Classification out{Verdict::Regular, e, std::nullopt};
  for (auto [x, y] : {std::pair{a, a + e}, std::pair{a - e, a}, std::pair{a - e, a + e}}) {
    out.witness = non_iso(bc, k, x, y);
    if (out.witness) {
      out.verdict = Verdict::Critical;
      break;
    }
  }
  return out;
}

Classification classify_symmetric(const Barcode& bc, double a) {
  return over_degrees(bc, a, [](const Barcode& b, double v, int k) { return classify_symmetric(b, v, k); });
}

Classification classify_bs(const Barcode& bc, double a) {
  return over_degrees(bc, a, [](const Barcode& b, double v, int k) { return classify_bs(b, v, k); });
}

CriticalityReport classify(const Barcode& bc, double a) {
  CriticalityReport r;
  r.value = a;
  r.epsilon = zone_radius(bc, a);
  for (int k : bc.degrees()) {
    const Classification s = classify_symmetric(bc, a, k);
    const Classification b = classify_bs(bc, a, k);
    r.per_degree.push_back({k, s.verdict, b.verdict});
    if (s.verdict == Verdict::Critical && !r.symmetric_witness) {
      r.symmetric = Verdict::Critical;
      r.symmetric_witness = s.witness;
    }
    if (b.verdict == Verdict::Critical && !r.bs_witness) {
      r.bs = Verdict::Critical;
      r.bs_witness = b.witness;
    }
  }
  return r;
}

}  // namespace critval::persistence
