#pragma once

#include <limits>
#include <string>
#include <vector>

namespace critval::persistence {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Interval summand with endpoint decorations. birth <= death; a singleton
// (birth == death) is closed at both ends; infinite endpoints are open.
struct DecoratedBar {
  double birth = 0.0;
  double death = kInf;
  bool birth_closed = true;
  bool death_closed = false;
  int degree = 0;

  bool singleton() const { return birth == death; }
  bool contains(double t) const;
  // The bar contains (t - delta, t) for some delta > 0.
  bool contains_left_of(double t) const { return birth < t && t <= death; }

  friend bool operator==(const DecoratedBar&, const DecoratedBar&) = default;
};

// Throws InvalidArgument on a malformed bar.
void validate(const DecoratedBar& bar);

DecoratedBar closed_bar(double birth, double death, int degree = 0);
DecoratedBar half_open_bar(double birth, double death, int degree = 0);  // [birth, death)
DecoratedBar singleton_bar(double at, int degree = 0);

struct Barcode {
  std::vector<DecoratedBar> bars;
  std::string label;

  Barcode() = default;
  Barcode(std::vector<DecoratedBar> b, std::string l = {});

  // Sorted distinct finite endpoints, of all bars or of degree k only.
  std::vector<double> endpoints() const;
  std::vector<double> endpoints(int k) const;
  // Sorted distinct degrees carried by some bar.
  std::vector<int> degrees() const;
  // Bars in a canonical order, for comparisons.
  std::vector<DecoratedBar> sorted_bars() const;
};

// Closed: the sublevel set {f <= t}. Open: {f < t}, the union of the closed
// ones below t, to which a bar contributes iff it contains some (t - delta, t).
enum class Mode { Closed, Open };

int dim_at(const Barcode& bc, int k, double a, Mode mode);

// Rank of H_k(X_a^source) -> H_k(X_b^target): the number of degree-k bars
// present at both ends. InvalidArgument unless a <= b, and for a == b with a
// closed source and open target (not an inclusion).
int rank(const Barcode& bc, int k, double a, double b, Mode source, Mode target);
inline int rank(const Barcode& bc, int k, double a, double b, Mode mode = Mode::Closed) {
  return rank(bc, k, a, b, mode, mode);
}

// rank == dim at the source == dim at the target.
bool is_iso(const Barcode& bc, int k, double a, double b, Mode source = Mode::Closed, Mode target = Mode::Closed);

}  // namespace critval::persistence
