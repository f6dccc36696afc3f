#include "critval/fields/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "critval/errors.hpp"
#include "critval/fields/trig.hpp"

namespace critval::fields {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::magnitude_bound(double t) const {
  double acc = 0.0;
  const double at = std::fabs(t);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + std::fabs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled_shift(double c, int k) const {
  if (coeffs_.empty() || c == 0.0) return {};
  std::vector<double> out(coeffs_.size() + static_cast<std::size_t>(k), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(k)] = c * coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled_shift(-1.0, 0); }

PolyPair next_derivative(const PolyPair& cur) {
  constexpr double pi = std::numbers::pi;
  const Polynomial& p = cur.sine_part;
  const Polynomial& q = cur.cosine_part;
  PolyPair next;
  next.sine_part = p.scaled_shift(2.0, 3) - p.derivative().scaled_shift(1.0, 2) + q.scaled_shift(pi, 2);
  next.cosine_part = q.scaled_shift(2.0, 3) - p.scaled_shift(pi, 2) - q.derivative().scaled_shift(1.0, 2);
  next.order = cur.order + 1;
  return next;
}

PolyPair deriv_polys(int n, int bound) {
  if (n < 0 || n > bound)
    throw InvalidArgument("deriv_polys: order " + std::to_string(n) + " outside [0, " + std::to_string(bound) + "]");
  PolyPair pair{Polynomial({1.0}), Polynomial(), 0};
  for (int i = 0; i < n; ++i) pair = next_derivative(pair);
  return pair;
}

double deriv_eval(const PolyPair& polys, double x) {
  if (!std::isfinite(x)) throw InvalidArgument("deriv_eval: non-finite abscissa");
  if (x == 0.0) return 0.0;
  const double damping = std::exp(-1.0 / (x * x));
  if (damping == 0.0) return 0.0;
  const double t = 1.0 / x;
  return damping * (polys.sine_part(t) * sin_pi(t) + polys.cosine_part(t) * cos_pi(t));
}

double deriv_eval(int n, double x, int bound) { return deriv_eval(deriv_polys(n, bound), x); }

}  // namespace critval::fields
