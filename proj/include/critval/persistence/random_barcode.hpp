#pragma once

#include <random>
#include <vector>

#include "critval/persistence/barcode.hpp"

namespace critval::persistence {

// Bar count geometric with mean (1 - p) / p; endpoints on a lattice of step
// `lattice` in [lo, hi] so that collisions are common.
struct RandomBarcodeOptions {
  double p = 1.0 / 7.0;
  double lattice = 1.0 / 128.0;
  double lo = -2.0;
  double hi = 2.0;
  double singleton_probability = 0.15;
  double infinite_probability = 0.1;
  int max_degree = 1;
};

Barcode random_barcode(std::mt19937_64& rng, const RandomBarcodeOptions& opts = {});

// Bars with endpoints among 1/n, n <= n_max, accumulating toward 0.
Barcode accumulating_barcode(std::mt19937_64& rng, int n_max = 64);

// Endpoints, midpoints between consecutive endpoints and one point beyond each
// end, half the endpoint spread away (1 for a single endpoint): one
// representative per zone of the arrangement. {0} for no endpoints.
std::vector<double> arrangement_points(const Barcode& bc);

}  // namespace critval::persistence
