#include "critval/fields/trig.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace critval::fields {

namespace {

// sin(pi r) for r in [0, 1/2].
double sin_pi_quarter(double r) {
  if (r <= 0.25) return std::sin(std::numbers::pi * r);
  return std::cos(std::numbers::pi * (0.5 - r));
}

}  // namespace

double sin_pi(double t) {
  if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
  double sign = 1.0;
  if (t < 0) {
    t = -t;
    sign = -1.0;
  }
  double r = std::fmod(t, 2.0);  // exact
  if (r >= 1.0) {
    r -= 1.0;  // exact (Sterbenz)
    sign = -sign;
  }
  if (r > 0.5) r = 1.0 - r;  // exact
  if (r == 0.0) return 0.0;
  return sign * sin_pi_quarter(r);
}

double cos_pi(double t) {
  if (!std::isfinite(t)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(std::fabs(t), 2.0);
  if (r > 1.0) r = 2.0 - r;  // cos is even about 1
  if (r == 0.5) return 0.0;
  if (r < 0.5) return sin_pi_quarter(0.5 - r);
  return -sin_pi_quarter(r - 0.5);
}

}  // namespace critval::fields
