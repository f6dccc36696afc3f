#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "critval/persistence/barcode.hpp"

namespace critval::persistence {

enum class Verdict { Regular, Critical };
std::string_view to_string(Verdict v);

// A non-isomorphism H_k(X_x) -> H_k(X_y) between closed sublevel sets.
struct MapWitness {
  int degree = 0;
  double x = 0.0;
  double y = 0.0;
  int rank = 0;
  int dim_x = 0;
  int dim_y = 0;
};

// Half the distance from a to the nearest other finite endpoint, or 1 when
// there is none. Every rank query with arguments in (a - 2e, a) or (a, a + 2e)
// takes the value it takes at the representatives a -+ e.
double zone_radius(const Barcode& bc, double a);
// Same from the sorted distinct finite endpoints of every degree.
double zone_radius(const std::vector<double>& endpoints, double a);

struct Classification {
  Verdict verdict = Verdict::Regular;
  double epsilon = 0.0;  // the zone representative used
  std::optional<MapWitness> witness;
};

// Critical in degree k iff X_{a-e} -> X_{a+e} fails to be an isomorphism for
// every small e > 0.
Classification classify_symmetric(const Barcode& bc, double a, int k);
// With a given representative 0 < e <= zone_radius(bc, a).
Classification classify_symmetric(const Barcode& bc, double a, int k, double e);
// Regular in degree k iff some neighbourhood of a has only isomorphisms
// X_x -> X_y, x < y; the pairs (a-e, a), (a, a+e), (a-e, a+e) decide it.
Classification classify_bs(const Barcode& bc, double a, int k);

// Over every degree carried by bc: critical iff critical in some degree.
Classification classify_symmetric(const Barcode& bc, double a);
Classification classify_bs(const Barcode& bc, double a);

struct DegreeVerdict {
  int degree = 0;
  Verdict symmetric = Verdict::Regular;
  Verdict bs = Verdict::Regular;
};

struct CriticalityReport {
  double value = 0.0;
  double epsilon = 0.0;
  Verdict symmetric = Verdict::Regular;
  Verdict bs = Verdict::Regular;
  std::optional<MapWitness> symmetric_witness;
  std::optional<MapWitness> bs_witness;
  std::vector<DegreeVerdict> per_degree;
};

CriticalityReport classify(const Barcode& bc, double a);

}  // namespace critval::persistence
