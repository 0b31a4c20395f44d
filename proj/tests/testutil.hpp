#pragma once

#include <random>
#include <vector>

#include "extlab/extend.hpp"
#include "extlab/parse.hpp"

// Shared corpus generators and independent oracles for the test suites.
namespace testutil {

using namespace extlab;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  long pick(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
  bool coin() { return pick(0, 1) == 1; }

  // Rational on a coarse grid inside [lo, hi].
  Rat rational(long lo, long hi, long den = 4) {
    return Rat(pick(lo * den, hi * den), den);
  }
};

// Random canonical set with up to max_pieces pieces, endpoints on a grid in
// [lo, hi], mixed open/closed flags and occasional singletons.
inline RealSet random_set(Rng& rng, int max_pieces, long lo = -10, long hi = 10, long den = 4) {
  int want = static_cast<int>(rng.pick(1, max_pieces));
  std::vector<Rat> cuts;
  for (int i = 0; i < 2 * want; ++i) cuts.push_back(rng.rational(lo, hi, den));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> pieces;
  for (size_t i = 0; i + 1 < cuts.size(); i += 2) {
    if (rng.pick(0, 9) == 0) {
      pieces.push_back(Interval::point(cuts[i]));
      continue;
    }
    Endpoint l{ExtRat(cuts[i]), rng.coin()};
    Endpoint h{ExtRat(cuts[i + 1]), rng.coin()};
    pieces.push_back(Interval{l, h});
  }
  if (pieces.empty()) pieces.push_back(Interval::point(cuts.front()));
  return canonicalize(std::move(pieces));
}

// Random set whose pieces are all closed (anchors then sit on included
// endpoints, which keeps chain stabilization immediate).
inline RealSet random_closed_set(Rng& rng, int max_pieces, long lo = -10, long hi = 10) {
  int want = static_cast<int>(rng.pick(1, max_pieces));
  std::vector<Rat> cuts;
  for (int i = 0; i < 2 * want; ++i) cuts.push_back(rng.rational(lo, hi, 2));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> pieces;
  for (size_t i = 0; i + 1 < cuts.size(); i += 2)
    pieces.push_back(Interval::closed(cuts[i], cuts[i + 1]));
  if (pieces.empty()) pieces.push_back(Interval::point(cuts.front()));
  return canonicalize(std::move(pieces));
}

inline Poly random_affine(Rng& rng, long range = 4) {
  return Poly::affine(Rat(rng.pick(-range, range)), rng.rational(-range, range, 2));
}

inline Poly random_poly(Rng& rng, int max_degree, long range = 3) {
  int deg = static_cast<int>(rng.pick(0, max_degree));
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rng.rational(-range, range, 2));
  Poly p{std::move(c)};
  return p.is_zero() ? Poly::constant(Rat(1)) : p;
}

// Piecewise function over `domain` splitting each piece into up to
// `max_parts` subpieces carrying the polynomials `gen` produces.
template <typename Gen>
PiecewiseFunc random_pwfunc_on(Rng& rng, const RealSet& domain, int max_parts, Gen gen) {
  std::vector<PiecePoly> pieces;
  for (const auto& piece : domain.pieces()) {
    if (piece.is_singleton() || !piece.lo.value.finite() || !piece.hi.value.finite()) {
      pieces.push_back({piece, gen(rng)});
      continue;
    }
    int parts = static_cast<int>(rng.pick(1, max_parts));
    const Rat& a = piece.lo.value.value;
    const Rat& b = piece.hi.value.value;
    std::vector<Rat> cuts;
    for (int i = 1; i < parts; ++i) cuts.push_back(a + (b - a) * Rat(i, parts));
    Endpoint prev = piece.lo;
    for (size_t i = 0; i <= cuts.size(); ++i) {
      bool left_owns = i < cuts.size() ? rng.coin() : false;
      Endpoint next = i < cuts.size() ? Endpoint{ExtRat(cuts[i]), left_owns} : piece.hi;
      pieces.push_back({Interval{prev, next}, gen(rng)});
      if (i < cuts.size()) prev = Endpoint{ExtRat(cuts[i]), !left_owns};
    }
  }
  return make_pwfunc(domain, std::move(pieces));
}

inline PiecewiseFunc random_affine_pwfunc(Rng& rng, const RealSet& domain, int max_parts = 3) {
  return random_pwfunc_on(rng, domain, max_parts, [](Rng& r) { return random_affine(r); });
}

// Random rational drawn from inside some piece of s.
inline Rat random_member(Rng& rng, const RealSet& s) {
  const auto& pieces = s.pieces();
  const Interval& p = pieces[static_cast<size_t>(rng.pick(0, static_cast<long>(pieces.size()) - 1))];
  if (p.is_singleton()) return p.lo.value.value;
  Rat lo = p.lo.value.finite() ? p.lo.value.value : p.hi.value.value - 8;
  Rat hi = p.hi.value.finite() ? p.hi.value.value : p.lo.value.value + 8;
  long den = 64;
  Rat x = lo + (hi - lo) * Rat(rng.pick(1, den - 1), den);
  return x;
}

inline Rat random_rational(Rng& rng, long lo = -12, long hi = 12, long den = 7) {
  return Rat(rng.pick(lo * den, hi * den), den);
}

// ceil(1/d) as an int, for stabilization bound checks.
inline int inv_ceil(const Rat& d) {
  Rat inv = 1 / d;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
  return static_cast<int>(q.get_si());
}

}  // namespace testutil
