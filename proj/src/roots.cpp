#include "extlab/roots.hpp"

#include <algorithm>
#include <map>

namespace extlab {

namespace {

// Positive rescale keeping coefficients small; any positive factor preserves
// the Sturm property.
Poly positive_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rat m(0);
  for (const auto& c : p.coeffs()) m = rat_max(m, rat_abs(c));
  return scale(p, Rat(1) / m);
}

}  // namespace

std::vector<Poly> sturm_chain(const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<Poly> chain;
  chain.push_back(q);
  if (q.degree() == 0) return chain;
  chain.push_back(positive_normalize(derivative(q)));
  while (chain.back().degree() > 0) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;  // q not squarefree; static part ends the chain
    chain.push_back(positive_normalize(-r));
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sgn(p(x)));
  return count_variations(signs);
}

int sign_variations_pos_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_variations(signs);
}

int sign_variations_neg_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    if (p.is_zero()) {
      signs.push_back(0);
    } else {
      int s = sgn(p.leading());
      if (p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return count_variations(signs);
}

Rat root_magnitude_bound(const Poly& p) {
  // Fujiwara-style: 2 * max_k |a_{n-k}/a_n|^{1/k}, estimated upward by
  // powers of two from numerator/denominator bit lengths.
  int n = p.degree();
  if (n <= 0) return Rat(1);
  long max_exp = 0;
  for (int k = 1; k <= n; ++k) {
    Rat r = rat_abs(p.coeff(static_cast<size_t>(n - k)) / p.leading());
    if (r == 0) continue;
    long bits = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2)) + 1;
    long e = bits <= 0 ? 0 : (bits + k - 1) / k;
    max_exp = std::max(max_exp, e);
  }
  Int b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(max_exp + 1));
  return Rat(b) + 1;
}

namespace {

// A bisection point in (lo, hi) avoiding roots of q.
Rat off_root_split(const Poly& q, const Rat& lo, const Rat& hi) {
  Rat m = (lo + hi) / 2;
  while (q(m) == 0) m = (lo + m) / 2;
  return m;
}

void isolate_rec(const Poly& q, const std::vector<Poly>& chain, const Rat& lo, const Rat& hi,
                 int vlo, int vhi, std::vector<RootBracket>& out) {
  int k = vlo - vhi;
  if (k <= 0) return;
  if (k == 1) {
    out.push_back(RootBracket{q, lo, hi});
    return;
  }
  Rat m = off_root_split(q, lo, hi);
  int vm = sign_variations_at(chain, m);
  isolate_rec(q, chain, lo, m, vlo, vm, out);
  isolate_rec(q, chain, m, hi, vm, vhi, out);
}

// One bisection step on a non-pinched bracket.
void bisect_step(RootBracket& b) {
  Rat m = (b.lo + b.hi) / 2;
  Rat fm = b.poly(m);
  if (fm == 0) {
    b.lo = b.hi = m;
    return;
  }
  if (sgn(b.poly(b.lo)) != sgn(fm)) b.hi = m; else b.lo = m;
}

// Bisect until the (single) root's position relative to w is decided.
// Returns -1 (root < w), 0 (root == w), +1 (root > w).
int side_of(RootBracket& b, const Rat& w) {
  if (b.pinched()) return cmp(b.lo, w);
  if (b.poly(w) == 0 && b.lo < w && w < b.hi) return 0;
  while (b.lo < w && w < b.hi) bisect_step(b);
  if (b.pinched()) return cmp(b.lo, w);
  return b.lo >= w ? 1 : -1;
}

}  // namespace

std::vector<RootBracket> isolate_roots(const Poly& p, const Interval& within) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  Poly q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  std::vector<Poly> chain = sturm_chain(q);
  Rat bound = root_magnitude_bound(q);
  Rat lo = -bound, hi = bound;  // no roots at +-bound by construction
  std::vector<RootBracket> all;
  isolate_rec(q, chain, lo, hi, sign_variations_at(chain, lo), sign_variations_at(chain, hi), all);

  std::vector<RootBracket> kept;
  for (auto& b : all) {
    bool inside = true;
    if (within.lo.value.finite()) {
      int s = side_of(b, within.lo.value.value);
      if (s < 0 || (s == 0 && !within.lo.included)) inside = false;
    }
    if (inside && within.hi.value.finite()) {
      int s = side_of(b, within.hi.value.value);
      if (s > 0 || (s == 0 && !within.hi.included)) inside = false;
    }
    if (!inside) continue;
    while (!b.pinched() && b.width() > 1) bisect_step(b);
    kept.push_back(std::move(b));
  }
  return kept;
}

RootBracket refine(RootBracket b, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  if (!b.pinched() && b.poly(b.lo) == 0) {
    b.hi = b.lo;
    return b;
  }
  if (!b.pinched() && b.poly(b.hi) == 0) {
    b.lo = b.hi;
    return b;
  }
  while (!b.pinched() && b.width() > eps) bisect_step(b);
  return b;
}

namespace {

std::vector<Int> divisors_of(const Int& value) {
  Int v = abs(value);
  std::map<Int, int> factors;
  Int d = 2;
  // Trial division; coefficients in this library's corpora stay small.
  while (d * d <= v && d < 1000000) {
    while (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
      ++factors[d];
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    ++d;
  }
  if (v > 1) ++factors[v];
  std::vector<Int> divs{Int(1)};
  for (const auto& [prime, mult] : factors) {
    size_t base = divs.size();
    Int pk(1);
    for (int e = 1; e <= mult; ++e) {
      pk *= prime;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  if (p.degree() == 0) return {};
  // Scale to integer coefficients.
  Int lcm(1);
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ic;
  ic.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rat v = c * Rat(lcm);
    ic.push_back(v.get_num());
  }
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= ic.size()) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const Int& a0 = ic[low];
  const Int& an = ic.back();
  for (const Int& u : divisors_of(a0)) {
    for (const Int& v : divisors_of(an)) {
      Rat cand(u, v);
      cand.canonicalize();
      if (p(cand) == 0) roots.push_back(cand);
      cand = -cand;
      if (p(cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// One bisection step narrowing a LocatedRoot enclosure toward its root.
void narrow(LocatedRoot& r, const Poly& squarefree) {
  if (r.exact) return;
  RootBracket b{squarefree, r.lo, r.hi};
  bisect_step(b);
  if (b.pinched()) {
    r = LocatedRoot{true, b.lo, b.lo, b.lo};
  } else {
    r.lo = b.lo;
    r.hi = b.hi;
    r.value = (b.lo + b.hi) / 2;
  }
}

}  // namespace

std::vector<TaggedRoot> locate_roots_multi(const std::vector<Poly>& ps, const Interval& within,
                                           const Rat& eps) {
  std::vector<TaggedRoot> all;
  std::vector<Poly> sqfree(ps.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    sqfree[i] = squarefree_part(ps[i]);
    for (auto& r : locate_roots(ps[i], within, eps)) all.push_back(TaggedRoot{i, r});
  }
  auto order = [](const TaggedRoot& a, const TaggedRoot& b) {
    if (a.root.lo != b.root.lo) return a.root.lo < b.root.lo;
    return a.root.hi < b.root.hi;
  };
  std::sort(all.begin(), all.end(), order);
  for (bool overlap = true; overlap;) {
    overlap = false;
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      // Brackets may touch each other but must stay clear of exact roots and
      // must never properly overlap. Distinct roots guarantee termination.
      bool either_exact = all[i].root.exact || all[i + 1].root.exact;
      while (either_exact ? all[i].root.hi >= all[i + 1].root.lo
                          : all[i].root.hi > all[i + 1].root.lo) {
        if (all[i].root.exact && all[i + 1].root.exact)
          throw std::logic_error("locate_roots_multi: coincident roots");
        overlap = true;
        narrow(all[i].root, sqfree[all[i].source]);
        narrow(all[i + 1].root, sqfree[all[i + 1].source]);
        either_exact = all[i].root.exact || all[i + 1].root.exact;
      }
    }
    if (overlap) std::sort(all.begin(), all.end(), order);
  }
  return all;
}

std::vector<LocatedRoot> locate_roots(const Poly& p, const Interval& within, const Rat& eps) {
  std::vector<RootBracket> brackets = isolate_roots(p, within);
  std::vector<Rat> rationals = rational_roots(p);
  std::vector<LocatedRoot> out;
  for (auto& b : brackets) {
    bool exact = false;
    Rat value;
    if (b.pinched()) {
      exact = true;
      value = b.lo;
    } else {
      for (const auto& r : rationals) {
        if (b.lo < r && r < b.hi && b.poly(r) == 0) {
          exact = true;
          value = r;
          break;
        }
      }
    }
    if (exact) {
      out.push_back(LocatedRoot{true, value, value, value});
    } else {
      RootBracket rb = refine(b, eps);
      if (rb.pinched()) {
        out.push_back(LocatedRoot{true, rb.lo, rb.lo, rb.lo});
      } else {
        out.push_back(LocatedRoot{false, rb.midpoint(), rb.lo, rb.hi});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LocatedRoot& a, const LocatedRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace extlab
