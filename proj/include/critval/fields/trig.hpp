#pragma once

namespace critval::fields {

// sin(pi * t) and cos(pi * t) with exact argument reduction, so that integer
// and half-integer arguments yield exact zeros. Used everywhere sin(pi/x)
// appears, which keeps e.g. the curve endpoint (1, sin(pi)) at exactly (1, 0).
double sin_pi(double t);
double cos_pi(double t);

// sin(pi / x) for x != 0.
inline double sine_curve(double x) { return sin_pi(1.0 / x); }

}  // namespace critval::fields
