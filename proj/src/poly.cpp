#include "extlab/poly.hpp"

#include <algorithm>

namespace extlab {

bool operator==(const Poly& a, const Poly& b) { return a.coeffs() == b.coeffs(); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) { return scale(a, Rat(-1)); }

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly scale(const Poly& p, const Rat& c) {
  std::vector<Rat> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.push_back(a * c);
  return Poly(std::move(out));
}

Poly derivative(const Poly& p) {
  if (p.coeffs().size() <= 1) return Poly();
  std::vector<Rat> out;
  out.reserve(p.coeffs().size() - 1);
  for (size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(p.coeffs()[i] * Rat(static_cast<long>(i)));
  return Poly(std::move(out));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + Poly::constant(*it);
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot;
  int db = b.degree();
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rat(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    int k = static_cast<int>(rem.size()) - 1 - db;
    Rat f = rem.back() / b.leading();
    quot[k] = f;
    for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.coeffs()[i];
    rem.pop_back();
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(a, Rat(1) / a.leading());  // monic
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, derivative(p));
  if (g.degree() < 1) return p;
  return divmod(p, g).first;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    Rat a = rat_abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (i == 0) {
      out += to_string(a);
    } else {
      if (!unit) out += to_string(a) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace extlab
