#pragma once

#include <vector>

namespace critval::fields {

// Dense real polynomial, coeffs[i] multiplies t^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(int i) const;

  double operator()(double t) const;
  // Sum of |c_i| |t|^i; bounds |p(t)|.
  double magnitude_bound(double t) const;

  Polynomial derivative() const;
  // Multiply by c t^k.
  Polynomial scaled_shift(double c, int k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

// k^(n)(x) = e^{-1/x^2} (sine_part(1/x) sin(pi/x) + cosine_part(1/x) cos(pi/x))
// for k(x) = e^{-1/x^2} sin(pi/x), x != 0.
struct PolyPair {
  Polynomial sine_part;
  Polynomial cosine_part;
  int order = 0;
};

inline constexpr int kDefaultDerivativeBound = 12;

// Iterates the recurrence from (1, 0) n times.
PolyPair deriv_polys(int n, int bound = kDefaultDerivativeBound);
// One recurrence step: (P, Q) -> (2t^3 P - t^2 P' + pi t^2 Q, 2t^3 Q - pi t^2 P - t^2 Q').
PolyPair next_derivative(const PolyPair& current);

// n-th derivative of k at x; exactly 0 at x = 0.
double deriv_eval(int n, double x, int bound = kDefaultDerivativeBound);
double deriv_eval(const PolyPair& polys, double x);

}  // namespace critval::fields
