#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extlab/rational.hpp"

namespace extlab {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. Normalized: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Rat c) { return Poly({std::move(c)}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }
  /// a*x + b
  static Poly affine(Rat a, Rat b) { return Poly({std::move(b), std::move(a)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& p, const Rat& c);
Poly derivative(const Poly& p);
/// p(q(x))
Poly compose(const Poly& p, const Poly& q);

/// Euclidean division over the rationals; returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);

/// p / gcd(p, p'): same real roots, all simple.
Poly squarefree_part(const Poly& p);

/// Canonical text form, highest degree first: "3/2*x^2 - x + 1/3".
std::string to_string(const Poly& p);

}  // namespace extlab
