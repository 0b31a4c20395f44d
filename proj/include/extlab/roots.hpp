#pragma once

#include <vector>

#include "extlab/poly.hpp"
#include "extlab/realset.hpp"

namespace extlab {

/// An isolating interval for exactly one real root of a squarefree
/// polynomial. lo == hi encodes an exactly known root; otherwise
/// sign(poly(lo)) != sign(poly(hi)) and the root is interior.
struct RootBracket {
  Poly poly;  // squarefree
  Rat lo, hi;

  bool pinched() const { return lo == hi; }
  Rat midpoint() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

/// Sturm chain of a squarefree polynomial (first entry the polynomial, last
/// a nonzero constant).
std::vector<Poly> sturm_chain(const Poly& squarefree);

int sign_variations_at(const std::vector<Poly>& chain, const Rat& x);
int sign_variations_neg_inf(const std::vector<Poly>& chain);
int sign_variations_pos_inf(const std::vector<Poly>& chain);

/// Power-of-two bound B with every real root of p in (-B, B).
Rat root_magnitude_bound(const Poly& p);

/// Disjoint brackets covering every real root of p inside `within`
/// (multiplicities collapsed through squarefree_part), certified by Sturm
/// sign-variation counts. Brackets are tightened to width <= 1.
std::vector<RootBracket> isolate_roots(const Poly& p, const Interval& within);

/// Bisect until hi - lo <= eps, preserving the bracketed root. Pinches to an
/// exact bracket when a bisection point hits the root.
RootBracket refine(RootBracket b, const Rat& eps);

/// All rational roots of p, ascending, found via the integer-coefficient
/// divisor test; exact (complete when the scaled coefficients factor within
/// the trial-division budget, which covers the corpus used here).
std::vector<Rat> rational_roots(const Poly& p);

/// A root of p located either exactly (rational) or by a refined bracket.
struct LocatedRoot {
  bool exact;
  Rat value;     // the root when exact, otherwise the bracket midpoint
  Rat lo, hi;    // enclosing bracket (lo == hi == value when exact)
};

/// Every real root of p inside `within`, rational ones exact, the rest
/// bracketed to width <= eps and pairwise disjoint. Ascending order.
std::vector<LocatedRoot> locate_roots(const Poly& p, const Interval& within, const Rat& eps);

struct TaggedRoot {
  size_t source;  // index into the input polynomial list
  LocatedRoot root;
};

/// Roots of several polynomials merged into one ascending list whose
/// enclosures are pairwise non-overlapping (they may touch at endpoints).
/// The polynomials must not share real roots inside `within`.
std::vector<TaggedRoot> locate_roots_multi(const std::vector<Poly>& ps, const Interval& within,
                                           const Rat& eps);

}  // namespace extlab
