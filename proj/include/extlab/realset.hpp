#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "extlab/rational.hpp"

namespace extlab {

/// Rational extended by -inf/+inf, the value type of interval endpoints.
struct ExtRat {
  int kind = 0;  // -1 = -inf, 0 = finite, +1 = +inf
  Rat value;     // meaningful only when finite

  ExtRat() = default;
  ExtRat(Rat v) : kind(0), value(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtRat neg_inf() { return ExtRat(-1); }
  static ExtRat pos_inf() { return ExtRat(+1); }

  bool finite() const { return kind == 0; }

 private:
  explicit ExtRat(int k) : kind(k) {}
};

inline int cmp(const ExtRat& a, const ExtRat& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind != 0) return 0;
  return cmp(a.value, b.value);
}
inline bool operator==(const ExtRat& a, const ExtRat& b) { return cmp(a, b) == 0; }
inline bool operator<(const ExtRat& a, const ExtRat& b) { return cmp(a, b) < 0; }

struct Endpoint {
  ExtRat value;
  bool included = false;  // must be false at infinities
};

/// One interval piece. lo.value <= hi.value; equality forces both endpoints
/// included (a singleton), so empty intervals are unrepresentable.
struct Interval {
  Endpoint lo, hi;

  bool is_singleton() const { return lo.value == hi.value; }
  bool valid() const;
  bool contains(const Rat& x) const;

  static Interval closed(Rat a, Rat b) { return {{ExtRat(std::move(a)), true}, {ExtRat(std::move(b)), true}}; }
  static Interval open(Rat a, Rat b) { return {{ExtRat(std::move(a)), false}, {ExtRat(std::move(b)), false}}; }
  static Interval left_open(Rat a, Rat b) { return {{ExtRat(std::move(a)), false}, {ExtRat(std::move(b)), true}}; }
  static Interval right_open(Rat a, Rat b) { return {{ExtRat(std::move(a)), true}, {ExtRat(std::move(b)), false}}; }
  static Interval point(Rat a) { return closed(a, a); }
  static Interval ray_le(Rat b) { return {{ExtRat::neg_inf(), false}, {ExtRat(std::move(b)), true}}; }
  static Interval ray_lt(Rat b) { return {{ExtRat::neg_inf(), false}, {ExtRat(std::move(b)), false}}; }
  static Interval ray_ge(Rat a) { return {{ExtRat(std::move(a)), true}, {ExtRat::pos_inf(), false}}; }
  static Interval ray_gt(Rat a) { return {{ExtRat(std::move(a)), false}, {ExtRat::pos_inf(), false}}; }
  static Interval all() { return {{ExtRat::neg_inf(), false}, {ExtRat::pos_inf(), false}}; }
};

bool operator==(const Interval& a, const Interval& b);

/// Canonical finite union of disjoint, maximally-merged intervals, sorted by
/// lower endpoint. Equal membership predicates have identical canonical
/// forms, so set equality is structural. Immutable after construction.
class RealSet {
 public:
  RealSet() = default;  // empty set

  static RealSet of(std::vector<Interval> raw);          // canonicalizes
  static RealSet of(std::initializer_list<Interval> l) { return of(std::vector<Interval>(l)); }
  static RealSet line() { return of({Interval::all()}); }

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool contains(const Rat& x) const;

 private:
  explicit RealSet(std::vector<Interval> canonical) : pieces_(std::move(canonical)) {}
  friend RealSet canonicalize(std::vector<Interval> raw);

  std::vector<Interval> pieces_;
};

bool operator==(const RealSet& a, const RealSet& b);
inline bool operator!=(const RealSet& a, const RealSet& b) { return !(a == b); }

RealSet canonicalize(std::vector<Interval> raw);

RealSet union_of(const RealSet& s, const RealSet& t);
RealSet intersect(const RealSet& s, const RealSet& t);
RealSet complement(const RealSet& s);
RealSet difference(const RealSet& s, const RealSet& t);

inline bool subset_of(const RealSet& s, const RealSet& t) { return difference(s, t).is_empty(); }

RealSet closure(const RealSet& s);
RealSet interior(const RealSet& s);
bool is_closed(const RealSet& s);
bool is_open(const RealSet& s);

/// Interval-level intersection; empty result encoded as false return.
bool intersect_intervals(const Interval& a, const Interval& b, Interval& out);

/// F_n of the constructive F-sigma exhaustion of A: closed, increasing in n,
/// with union A. Shrink rule: each excluded finite endpoint moves inward by
/// 1/n, capped at the piece midpoint when the piece is bounded; included and
/// infinite endpoints stay put.
RealSet fsigma_decomposition(const RealSet& a, int n);

/// G_n = fsigma_decomposition(complement(A), n): closed, increasing, union
/// equal to the complement of A.
RealSet gdelta_codecomposition(const RealSet& a, int n);

/// Some rational member of a nonempty set (first-piece midpoint or an
/// included endpoint); throws on the empty set.
Rat sample_point(const RealSet& s);

/// Text notation: pieces joined by " U ", e.g. "[0,1) U (2,3] U {5}",
/// "(-inf,0]", "empty". Round-trips through parse_realset.
std::string to_string(const Interval& iv);
std::string to_string(const RealSet& s);

}  // namespace extlab
