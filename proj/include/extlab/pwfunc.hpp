#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extlab/poly.hpp"
#include "extlab/realset.hpp"
#include "extlab/roots.hpp"

namespace extlab {

struct PiecePoly {
  Interval piece;
  Poly expr;
};

/// Piecewise-polynomial function: disjoint interval pieces whose union is
/// the declared domain, each carrying an exact polynomial. Values are
/// immutable; every operation returns a new function.
struct PiecewiseFunc {
  RealSet domain;
  std::vector<PiecePoly> pieces;  // sorted by piece.lo

  bool is_empty() const { return pieces.empty(); }
};

/// Validates the piece invariants (disjoint, sorted, union == domain).
PiecewiseFunc make_pwfunc(RealSet domain, std::vector<PiecePoly> pieces);

/// Constant c on the whole of dom.
PiecewiseFunc constant_func(const RealSet& dom, const Rat& c);
/// Identity x on dom.
PiecewiseFunc identity_func(const RealSet& dom);

Rat eval(const PiecewiseFunc& f, const Rat& x);

PiecewiseFunc add(const PiecewiseFunc& f, const PiecewiseFunc& g);
PiecewiseFunc scale(const PiecewiseFunc& f, const Rat& c);
PiecewiseFunc negate(const PiecewiseFunc& f);

/// Sign-split results carry an exactness tag: APPROX when an irrational
/// split point had to be replaced by a rational one from a refined bracket,
/// with `slack` bounding the displacement.
enum class Exactness { Exact, Approx };

struct SplitFunc {
  PiecewiseFunc func;
  Exactness mode = Exactness::Exact;
  Rat slack = 0;
};

SplitFunc abs_pw(const PiecewiseFunc& f, const Rat& eps);
SplitFunc lattice_max(const PiecewiseFunc& f, const PiecewiseFunc& g, const Rat& eps);
SplitFunc lattice_min(const PiecewiseFunc& f, const PiecewiseFunc& g, const Rat& eps);

/// f after g. Requires range(g) within domain(f); violations raise
/// std::domain_error carrying a witness point.
PiecewiseFunc compose(const PiecewiseFunc& f, const PiecewiseFunc& g);

struct PreimageResult {
  RealSet set;
  Exactness mode = Exactness::Exact;
  std::optional<Rat> slack;  // outer-approximation radius in APPROX mode
};

/// {x : f(x) in target}. EXACT whenever every boundary solve has rational
/// roots; otherwise an outer approximation whose pieces, shrunk by slack,
/// form an inner approximation. slack <= eps.
PreimageResult preimage(const PiecewiseFunc& f, const RealSet& target, const Rat& eps);

struct NormResult {
  std::optional<Rat> exact;
  Rat lo, hi;       // enclosure; lo == hi == *exact when exact
  bool attained;    // some point of `over` attains the supremum
};

/// sup over `over` of f (signed). Uses closure limits at excluded endpoints.
NormResult supremum(const PiecewiseFunc& f, const RealSet& over, const Rat& eps);
NormResult infimum(const PiecewiseFunc& f, const RealSet& over, const Rat& eps);
/// sup of |f| over `over`.
NormResult sup_norm(const PiecewiseFunc& f, const RealSet& over, const Rat& eps);

PiecewiseFunc restrict_to(const PiecewiseFunc& f, const RealSet& s);

/// Continuous-on-each-component approximant: equals f except on ramps of
/// width min(1/n, half the neighbouring piece) carved at each jump point
/// from the side that does not own the point; f's value at the jump itself
/// is preserved for every n.
PiecewiseFunc continuous_approximation(const PiecewiseFunc& f, int n);

/// Structural equality after refining both functions to a common partition.
/// Singleton pieces compare by value, longer pieces by polynomial identity.
bool canonical_equal(const PiecewiseFunc& f, const PiecewiseFunc& g);

/// A point where the two functions differ (present iff not canonical_equal
/// on a common domain).
std::optional<Rat> difference_witness(const PiecewiseFunc& f, const PiecewiseFunc& g);

/// Interior breakpoint between two adjacent pieces of one domain component.
struct Breakpoint {
  Rat point;
  size_t left_piece, right_piece;  // indices into pieces
  bool left_owns;                  // which side contains the point
  Rat left_limit, right_limit;
  bool jump() const { return left_limit != right_limit; }
};

/// All interior breakpoints, component by component.
std::vector<Breakpoint> breakpoints(const PiecewiseFunc& f);

/// Jump abscissas only.
std::vector<Rat> jump_points(const PiecewiseFunc& f);

/// Piecewise text grammar: "[0,1): x^2; [1,2]: 2*x - 1"; "empty" for the
/// empty function. Round-trips through parse_pwfunc.
std::string to_string(const PiecewiseFunc& f);

}  // namespace extlab
