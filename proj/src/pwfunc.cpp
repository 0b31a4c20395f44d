#include "extlab/pwfunc.hpp"

#include <algorithm>
#include <set>

namespace extlab {

namespace {

bool piece_lo_less(const PiecePoly& a, const PiecePoly& b) {
  int c = cmp(a.piece.lo.value, b.piece.lo.value);
  if (c != 0) return c < 0;
  return a.piece.lo.included && !b.piece.lo.included;
}

// Adjacent and overlap-free, assuming a before b.
bool disjoint_ordered(const Interval& a, const Interval& b) {
  int c = cmp(a.hi.value, b.lo.value);
  if (c < 0) return true;
  if (c > 0) return false;
  return !(a.hi.included && b.lo.included);
}

RealSet as_set(const Interval& iv) { return RealSet::of({iv}); }

Rat piece_value(const PiecePoly& pp) { return pp.expr(pp.piece.lo.value.value); }

// Merge adjacent pieces that represent one polynomial stretch.
std::vector<PiecePoly> coalesce(std::vector<PiecePoly> pieces) {
  std::vector<PiecePoly> out;
  for (auto& next : pieces) {
    if (!out.empty()) {
      PiecePoly& cur = out.back();
      int c = cmp(cur.piece.hi.value, next.piece.lo.value);
      bool touching = c == 0 && (cur.piece.hi.included || next.piece.lo.included);
      if (touching) {
        bool cur_pt = cur.piece.is_singleton();
        bool next_pt = next.piece.is_singleton();
        bool ok = false;
        Poly poly;
        if (!cur_pt && !next_pt) {
          ok = cur.expr == next.expr;
          poly = cur.expr;
        } else if (cur_pt && !next_pt) {
          ok = next.expr(cur.piece.lo.value.value) == piece_value(cur);
          poly = next.expr;
        } else if (!cur_pt && next_pt) {
          ok = cur.expr(next.piece.lo.value.value) == piece_value(next);
          poly = cur.expr;
        }
        if (ok) {
          cur.piece.hi = next.piece.hi;
          cur.expr = std::move(poly);
          continue;
        }
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

PiecewiseFunc make_pwfunc(RealSet domain, std::vector<PiecePoly> pieces) {
  std::sort(pieces.begin(), pieces.end(), piece_lo_less);
  std::vector<Interval> cover;
  cover.reserve(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].piece.valid())
      throw std::invalid_argument("make_pwfunc: malformed piece " + to_string(pieces[i].piece));
    if (i > 0 && !disjoint_ordered(pieces[i - 1].piece, pieces[i].piece))
      throw std::invalid_argument("make_pwfunc: overlapping pieces at " + to_string(pieces[i].piece));
    cover.push_back(pieces[i].piece);
  }
  if (canonicalize(cover) != domain)
    throw std::invalid_argument("make_pwfunc: pieces do not cover the declared domain");
  return PiecewiseFunc{std::move(domain), std::move(pieces)};
}

PiecewiseFunc constant_func(const RealSet& dom, const Rat& c) {
  std::vector<PiecePoly> pieces;
  for (const auto& iv : dom.pieces()) pieces.push_back({iv, Poly::constant(c)});
  return PiecewiseFunc{dom, std::move(pieces)};
}

PiecewiseFunc identity_func(const RealSet& dom) {
  std::vector<PiecePoly> pieces;
  for (const auto& iv : dom.pieces()) pieces.push_back({iv, Poly::x()});
  return PiecewiseFunc{dom, std::move(pieces)};
}

Rat eval(const PiecewiseFunc& f, const Rat& x) {
  for (const auto& pp : f.pieces)
    if (pp.piece.contains(x)) return pp.expr(x);
  throw std::domain_error("eval: " + to_string(x) + " is outside the domain");
}

// ---------------------------------------------------------------------------
// Common-partition refinement.

namespace {

// Splits a piece into singleton atoms at every contained cut value and open
// atoms in between. Cut sets containing all piece endpoints of two functions
// give both the identical atom structure.
void atomize_piece(const PiecePoly& pp, const std::vector<Rat>& cuts,
                   std::vector<PiecePoly>& out) {
  const Interval& iv = pp.piece;
  Endpoint prev = iv.lo;
  for (const auto& v : cuts) {
    if (!iv.contains(v)) continue;
    Interval region{prev, {ExtRat(v), false}};
    if (region.valid()) out.push_back({region, pp.expr});
    out.push_back({Interval::point(v), pp.expr});
    prev = Endpoint{ExtRat(v), false};
  }
  Interval tail{prev, iv.hi};
  if (tail.valid()) out.push_back({tail, pp.expr});
}

std::vector<Rat> endpoint_values(const PiecewiseFunc& f) {
  std::vector<Rat> vals;
  for (const auto& pp : f.pieces) {
    if (pp.piece.lo.value.finite()) vals.push_back(pp.piece.lo.value.value);
    if (pp.piece.hi.value.finite()) vals.push_back(pp.piece.hi.value.value);
  }
  return vals;
}

std::vector<PiecePoly> atomize(const PiecewiseFunc& f, std::vector<Rat> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<PiecePoly> out;
  for (const auto& pp : f.pieces) atomize_piece(pp, cuts, out);
  return out;
}

std::vector<Rat> merged_cuts(const PiecewiseFunc& f, const PiecewiseFunc& g) {
  std::vector<Rat> cuts = endpoint_values(f);
  auto gc = endpoint_values(g);
  cuts.insert(cuts.end(), gc.begin(), gc.end());
  return cuts;
}

}  // namespace

PiecewiseFunc add(const PiecewiseFunc& f, const PiecewiseFunc& g) {
  if (f.domain != g.domain) throw std::invalid_argument("add: domain mismatch");
  auto cuts = merged_cuts(f, g);
  auto fa = atomize(f, cuts);
  auto ga = atomize(g, cuts);
  if (fa.size() != ga.size()) throw std::logic_error("add: refinement mismatch");
  std::vector<PiecePoly> out;
  out.reserve(fa.size());
  for (size_t i = 0; i < fa.size(); ++i) out.push_back({fa[i].piece, fa[i].expr + ga[i].expr});
  return PiecewiseFunc{f.domain, coalesce(std::move(out))};
}

PiecewiseFunc scale(const PiecewiseFunc& f, const Rat& c) {
  std::vector<PiecePoly> out;
  out.reserve(f.pieces.size());
  for (const auto& pp : f.pieces) out.push_back({pp.piece, scale(pp.expr, c)});
  return PiecewiseFunc{f.domain, coalesce(std::move(out))};
}

PiecewiseFunc negate(const PiecewiseFunc& f) { return scale(f, Rat(-1)); }

bool canonical_equal(const PiecewiseFunc& f, const PiecewiseFunc& g) {
  if (f.domain != g.domain) return false;
  auto cuts = merged_cuts(f, g);
  auto fa = atomize(f, cuts);
  auto ga = atomize(g, cuts);
  if (fa.size() != ga.size()) return false;
  for (size_t i = 0; i < fa.size(); ++i) {
    if (!(fa[i].piece == ga[i].piece)) return false;
    if (fa[i].piece.is_singleton()) {
      if (piece_value(fa[i]) != piece_value(ga[i])) return false;
    } else if (fa[i].expr != ga[i].expr) {
      return false;
    }
  }
  return true;
}

std::optional<Rat> difference_witness(const PiecewiseFunc& f, const PiecewiseFunc& g) {
  if (f.domain != g.domain) {
    RealSet sym = union_of(difference(f.domain, g.domain), difference(g.domain, f.domain));
    if (!sym.is_empty()) return sample_point(sym);
    return std::nullopt;
  }
  auto cuts = merged_cuts(f, g);
  auto fa = atomize(f, cuts);
  auto ga = atomize(g, cuts);
  for (size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].piece.is_singleton()) {
      if (piece_value(fa[i]) != piece_value(ga[i])) return fa[i].piece.lo.value.value;
      continue;
    }
    Poly d = fa[i].expr - ga[i].expr;
    if (d.is_zero()) continue;
    // A nonzero polynomial cannot vanish at deg+1 distinct points.
    const Interval& iv = fa[i].piece;
    int tries = d.degree() + 1;
    for (int k = 1; k <= tries; ++k) {
      Rat x;
      if (iv.lo.value.finite() && iv.hi.value.finite()) {
        x = iv.lo.value.value +
            (iv.hi.value.value - iv.lo.value.value) * Rat(k, static_cast<long>(tries) + 1);
      } else if (iv.lo.value.finite()) {
        x = iv.lo.value.value + k;
      } else if (iv.hi.value.finite()) {
        x = iv.hi.value.value - k;
      } else {
        x = Rat(k);
      }
      if (d(x) != 0) return x;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Preimages of interval targets under one polynomial piece.

namespace {

struct IntervalPreimage {
  std::vector<Interval> pieces;
  bool exact = true;
  Rat slack = 0;
};

Rat constant_value(const Poly& p) { return p.is_zero() ? Rat(0) : p.coeff(0); }

// Sample inside `piece` strictly left of x (piece.lo < x assumed).
Rat sample_left_of(const Interval& piece, const Rat& x) {
  if (piece.lo.value.finite()) return (piece.lo.value.value + x) / 2;
  return x - 1;
}

Rat sample_right_of(const Interval& piece, const Rat& x) {
  if (piece.hi.value.finite()) return (x + piece.hi.value.value) / 2;
  return x + 1;
}

IntervalPreimage poly_preimage_on_interval(const Poly& p, const Interval& piece,
                                           const Interval& target, const Rat& eps) {
  IntervalPreimage out;
  if (piece.is_singleton()) {
    if (target.contains(p(piece.lo.value.value))) out.pieces.push_back(piece);
    return out;
  }
  if (p.is_constant()) {
    if (target.contains(constant_value(p))) out.pieces.push_back(piece);
    return out;
  }

  // Boundary polynomials p - c for each finite target endpoint c.
  std::vector<Poly> boundary;
  std::vector<bool> boundary_included;
  if (target.lo.value.finite()) {
    boundary.push_back(p - Poly::constant(target.lo.value.value));
    boundary_included.push_back(target.lo.included);
  }
  if (target.hi.value.finite() && !(target.hi.value == target.lo.value)) {
    boundary.push_back(p - Poly::constant(target.hi.value.value));
    boundary_included.push_back(target.hi.included);
  }
  if (boundary.empty()) {  // target is the whole line
    out.pieces.push_back(piece);
    return out;
  }

  std::vector<TaggedRoot> roots = locate_roots_multi(boundary, piece, eps);

  // Membership of the (possibly empty) regions between consecutive root
  // enclosures. Membership is constant there; a bracket edge is a sound
  // anchor point since bracket endpoints are never boundary roots, while
  // exact-root edges need an interior sample.
  std::vector<bool> region_in(roots.size() + 1, false);
  auto member = [&](const Rat& x) { return target.contains(p(x)); };
  for (size_t i = 0; i <= roots.size(); ++i) {
    const LocatedRoot* left = i > 0 ? &roots[i - 1].root : nullptr;
    const LocatedRoot* right = i < roots.size() ? &roots[i].root : nullptr;
    if (left && !left->exact) {
      region_in[i] = member(left->hi);
    } else if (right && !right->exact) {
      region_in[i] = member(right->lo);
    } else if (left && right) {
      region_in[i] = member((left->value + right->value) / 2);
    } else if (!left && !right) {
      region_in[i] = member(sample_point(as_set(piece)));
    } else if (left) {
      if (!piece.hi.value.finite() || left->value < piece.hi.value.value)
        region_in[i] = member(sample_right_of(piece, left->value));
    } else {
      if (!piece.lo.value.finite() || piece.lo.value.value < right->value)
        region_in[i] = member(sample_left_of(piece, right->value));
    }
  }

  // Region intervals, open at every root enclosure edge.
  Endpoint prev = piece.lo;
  for (size_t i = 0; i <= roots.size(); ++i) {
    Endpoint next = i < roots.size() ? Endpoint{ExtRat(roots[i].root.lo), false} : piece.hi;
    if (region_in[i]) {
      Interval region{prev, next};
      if (region.valid()) out.pieces.push_back(region);
    }
    if (i < roots.size()) prev = Endpoint{ExtRat(roots[i].root.hi), false};
  }

  // Root enclosures themselves.
  for (size_t i = 0; i < roots.size(); ++i) {
    const LocatedRoot& r = roots[i].root;
    bool flag_in = boundary_included[roots[i].source];
    if (r.exact) {
      if (flag_in) out.pieces.push_back(Interval::point(r.value));
      continue;
    }
    out.exact = false;
    out.slack = rat_max(out.slack, r.hi - r.lo);
    bool left_in = region_in[i];
    bool right_in = region_in[i + 1];
    if (left_in && right_in && !flag_in)
      throw std::domain_error(
          "preimage: tangential contact with an excluded target endpoint at an irrational point "
          "is not representable");
    if (left_in || right_in || flag_in)
      out.pieces.push_back(Interval::closed(r.lo, r.hi));
  }
  return out;
}

}  // namespace

PreimageResult preimage(const PiecewiseFunc& f, const RealSet& target, const Rat& eps) {
  std::vector<Interval> pieces;
  bool exact = true;
  Rat slack(0);
  for (const auto& pp : f.pieces) {
    for (const auto& t : target.pieces()) {
      IntervalPreimage part = poly_preimage_on_interval(pp.expr, pp.piece, t, eps);
      exact = exact && part.exact;
      slack = rat_max(slack, part.slack);
      pieces.insert(pieces.end(), part.pieces.begin(), part.pieces.end());
    }
  }
  PreimageResult r{canonicalize(std::move(pieces)),
                   exact ? Exactness::Exact : Exactness::Approx, std::nullopt};
  if (!exact) r.slack = slack;
  return r;
}

// ---------------------------------------------------------------------------
// Composition.

PiecewiseFunc compose(const PiecewiseFunc& f, const PiecewiseFunc& g) {
  std::vector<PiecePoly> out;
  for (const auto& gp : g.pieces) {
    RealSet covered;
    for (const auto& fp : f.pieces) {
      IntervalPreimage part =
          poly_preimage_on_interval(gp.expr, gp.piece, fp.piece, pow10_inv(9));
      if (!part.exact)
        throw std::domain_error("compose: piece boundary solve has no rational root");
      for (const auto& k : part.pieces) out.push_back({k, compose(fp.expr, gp.expr)});
      covered = union_of(covered, canonicalize(part.pieces));
    }
    RealSet missing = difference(as_set(gp.piece), covered);
    if (!missing.is_empty()) {
      Rat w = sample_point(missing);
      throw std::domain_error("compose: range violation, g(" + to_string(w) + ") = " +
                              to_string(gp.expr(w)) + " lies outside the domain");
    }
  }
  return make_pwfunc(g.domain, coalesce(std::move(out)));
}

// ---------------------------------------------------------------------------
// Sign splits: |f|, max, min.

namespace {

// Pieces of f split so that the sign of `basis` is constant on each part;
// on each part `pick` chooses the output polynomial from the sign.
struct SignSplit {
  std::vector<PiecePoly> pieces;
  bool exact = true;
  Rat slack = 0;
};

void split_piece_by_sign(const Interval& piece, const Poly& basis,
                         const std::vector<std::pair<Poly, Poly>>& branch_for_piece,
                         size_t piece_index, const Rat& eps, SignSplit& out) {
  const auto& [pos_branch, neg_branch] = branch_for_piece[piece_index];
  auto emit = [&](const Interval& iv, int sign_hint) {
    out.pieces.push_back({iv, sign_hint >= 0 ? pos_branch : neg_branch});
  };
  if (piece.is_singleton()) {
    emit(piece, sgn(basis(piece.lo.value.value)));
    return;
  }
  if (basis.is_constant()) {
    emit(piece, sgn(constant_value(basis)));
    return;
  }
  std::vector<LocatedRoot> roots = locate_roots(basis, piece, eps);
  if (roots.empty()) {
    emit(piece, sgn(basis(sample_point(as_set(piece)))));
    return;
  }
  // Split points: exact roots split exactly (owned by the left part);
  // bracketed roots split at the bracket midpoint and taint exactness.
  std::vector<Rat> splits;
  for (const auto& r : roots) {
    if (!r.exact) {
      out.exact = false;
      out.slack = rat_max(out.slack, r.hi - r.lo);
    }
    splits.push_back(r.exact ? r.value : (r.lo + r.hi) / 2);
  }
  // Sign of basis strictly between consecutive roots; bracket edges are
  // sound anchors, exact-root edges need an interior sample.
  std::vector<int> sign_at(roots.size() + 1, 0);
  for (size_t i = 0; i <= roots.size(); ++i) {
    const LocatedRoot* left = i > 0 ? &roots[i - 1] : nullptr;
    const LocatedRoot* right = i < roots.size() ? &roots[i] : nullptr;
    if (left && !left->exact) {
      sign_at[i] = sgn(basis(left->hi));
    } else if (right && !right->exact) {
      sign_at[i] = sgn(basis(right->lo));
    } else if (left && right) {
      sign_at[i] = sgn(basis((left->value + right->value) / 2));
    } else if (left) {
      if (!piece.hi.value.finite() || left->value < piece.hi.value.value)
        sign_at[i] = sgn(basis(sample_right_of(piece, left->value)));
    } else {
      if (!piece.lo.value.finite() || piece.lo.value.value < right->value)
        sign_at[i] = sgn(basis(sample_left_of(piece, right->value)));
    }
  }
  Endpoint prev = piece.lo;
  for (size_t i = 0; i <= splits.size(); ++i) {
    Endpoint next = i < splits.size() ? Endpoint{ExtRat(splits[i]), true} : piece.hi;
    Interval part{prev, next};
    if (part.valid()) {
      int s = sign_at[i];
      if (s == 0 && part.is_singleton()) s = sgn(basis(part.lo.value.value));
      emit(part, s);
    }
    if (i < splits.size()) prev = Endpoint{ExtRat(splits[i]), false};
  }
}

SplitFunc sign_select(const PiecewiseFunc& f, const PiecewiseFunc& g, bool take_max,
                      const Rat& eps) {
  if (f.domain != g.domain) throw std::invalid_argument("lattice op: domain mismatch");
  auto cuts = merged_cuts(f, g);
  auto fa = atomize(f, cuts);
  auto ga = atomize(g, cuts);
  SignSplit split;
  std::vector<std::pair<Poly, Poly>> branches;
  branches.reserve(fa.size());
  for (size_t i = 0; i < fa.size(); ++i) {
    if (take_max)
      branches.emplace_back(fa[i].expr, ga[i].expr);  // f where f-g >= 0
    else
      branches.emplace_back(ga[i].expr, fa[i].expr);
  }
  for (size_t i = 0; i < fa.size(); ++i) {
    Poly basis = fa[i].expr - ga[i].expr;
    split_piece_by_sign(fa[i].piece, basis.is_zero() ? Poly::constant(Rat(0)) : basis, branches,
                        i, eps, split);
  }
  SplitFunc out;
  out.func = PiecewiseFunc{f.domain, coalesce(std::move(split.pieces))};
  out.mode = split.exact ? Exactness::Exact : Exactness::Approx;
  out.slack = split.slack;
  return out;
}

}  // namespace

SplitFunc abs_pw(const PiecewiseFunc& f, const Rat& eps) {
  return sign_select(f, negate(f), true, eps);
}

SplitFunc lattice_max(const PiecewiseFunc& f, const PiecewiseFunc& g, const Rat& eps) {
  return sign_select(f, g, true, eps);
}

SplitFunc lattice_min(const PiecewiseFunc& f, const PiecewiseFunc& g, const Rat& eps) {
  return sign_select(f, g, false, eps);
}

// ---------------------------------------------------------------------------
// Suprema / infima / sup norm.

namespace {

struct Candidate {
  bool exact;
  Rat value;     // exact value, or enclosure midpoint
  Rat lo, hi;    // enclosure (lo == hi == value when exact)
  bool attained;
};

// Upper bound on |p| over [-m, m]-style box via coefficient sums.
Rat coeff_bound(const Poly& p, const Rat& m) {
  Rat bound(0), power(1);
  Rat mm = rat_max(m, Rat(1));
  for (const auto& c : p.coeffs()) {
    bound += rat_abs(c) * power;
    power *= mm;
  }
  return bound;
}

void critical_point_candidates(const Poly& p, const Interval& j, const Rat& eps,
                               std::vector<Candidate>& cands) {
  Poly dp = derivative(p);
  if (dp.is_constant()) return;
  Interval inside{{j.lo.value, false}, {j.hi.value, false}};
  if (!inside.valid()) return;
  for (const auto& r : locate_roots(dp, inside, eps)) {
    if (r.exact) {
      Rat v = p(r.value);
      cands.push_back({true, v, v, v, true});
    } else {
      RootBracket b{squarefree_part(dp), r.lo, r.hi};
      for (;;) {
        Rat m = rat_max(rat_abs(b.lo), rat_abs(b.hi));
        Rat slope = coeff_bound(dp, m);
        Rat w = b.hi - b.lo;
        if (2 * slope * w <= eps || b.pinched()) {
          Rat center = p(b.lo);
          if (b.pinched()) {
            cands.push_back({true, center, center, center, true});
          } else {
            cands.push_back({false, center, center - slope * w, center + slope * w, true});
          }
          break;
        }
        b = refine(b, w / 2);
      }
    }
  }
}

NormResult combine_candidates(std::vector<Candidate> cands) {
  bool have_exact = false;
  Rat best;
  bool best_attained = false;
  for (const auto& c : cands) {
    if (!c.exact) continue;
    if (!have_exact || c.value > best) {
      best = c.value;
      best_attained = c.attained;
      have_exact = true;
    } else if (c.value == best) {
      best_attained = best_attained || c.attained;
    }
  }
  Rat enc_lo, enc_hi;
  bool have_enc = false;
  bool enc_attained = false;
  for (const auto& c : cands) {
    if (c.exact) continue;
    if (!have_enc || c.hi > enc_hi) {
      enc_hi = c.hi;
      enc_attained = c.attained;
    }
    if (!have_enc || c.lo > enc_lo) enc_lo = c.lo;
    have_enc = true;
  }
  if (!have_exact && !have_enc) throw std::logic_error("supremum: no candidates");
  if (!have_enc || (have_exact && best >= enc_hi))
    return NormResult{best, best, best, best_attained};
  Rat lo = have_exact ? rat_max(best, enc_lo) : enc_lo;
  return NormResult{std::nullopt, lo, enc_hi, enc_attained};
}

std::vector<Candidate> supremum_candidates(const PiecewiseFunc& f, const RealSet& over,
                                           const Rat& eps) {
  if (!subset_of(over, f.domain))
    throw std::invalid_argument("supremum: region is not contained in the domain");
  if (over.is_empty()) throw std::invalid_argument("supremum: empty region");
  std::vector<Candidate> cands;
  for (const auto& pp : f.pieces) {
    for (const auto& o : over.pieces()) {
      Interval j;
      if (!intersect_intervals(pp.piece, o, j)) continue;
      if (j.is_singleton()) {
        Rat v = pp.expr(j.lo.value.value);
        cands.push_back({true, v, v, v, true});
        continue;
      }
      if (pp.expr.is_constant()) {
        Rat v = constant_value(pp.expr);
        cands.push_back({true, v, v, v, true});
        continue;
      }
      if (!j.lo.value.finite() || !j.hi.value.finite())
        throw std::domain_error("supremum: unbounded on " + to_string(j));
      // Closure limits: excluded endpoints still contribute their values,
      // flagged as not attained.
      Rat vlo = pp.expr(j.lo.value.value);
      Rat vhi = pp.expr(j.hi.value.value);
      cands.push_back({true, vlo, vlo, vlo, j.lo.included});
      cands.push_back({true, vhi, vhi, vhi, j.hi.included});
      critical_point_candidates(pp.expr, j, eps, cands);
    }
  }
  return cands;
}

}  // namespace

NormResult supremum(const PiecewiseFunc& f, const RealSet& over, const Rat& eps) {
  return combine_candidates(supremum_candidates(f, over, eps));
}

NormResult infimum(const PiecewiseFunc& f, const RealSet& over, const Rat& eps) {
  NormResult s = supremum(negate(f), over, eps);
  NormResult r{std::nullopt, -s.hi, -s.lo, s.attained};
  if (s.exact) r.exact = -*s.exact;
  return r;
}

NormResult sup_norm(const PiecewiseFunc& f, const RealSet& over, const Rat& eps) {
  auto cands = supremum_candidates(f, over, eps);
  auto neg = supremum_candidates(negate(f), over, eps);
  cands.insert(cands.end(), neg.begin(), neg.end());
  // sup |f| = max(sup f, sup -f); the merged candidate pool realizes it.
  return combine_candidates(std::move(cands));
}

// ---------------------------------------------------------------------------

PiecewiseFunc restrict_to(const PiecewiseFunc& f, const RealSet& s) {
  if (!subset_of(s, f.domain))
    throw std::invalid_argument("restrict_to: set is not contained in the domain");
  std::vector<PiecePoly> out;
  for (const auto& pp : f.pieces) {
    for (const auto& sp : s.pieces()) {
      Interval j;
      if (intersect_intervals(pp.piece, sp, j)) out.push_back({j, pp.expr});
    }
  }
  return PiecewiseFunc{s, coalesce(std::move(out))};
}

std::vector<Breakpoint> breakpoints(const PiecewiseFunc& f) {
  std::vector<Breakpoint> out;
  for (size_t i = 0; i + 1 < f.pieces.size(); ++i) {
    const Interval& a = f.pieces[i].piece;
    const Interval& b = f.pieces[i + 1].piece;
    if (!(a.hi.value.finite() && b.lo.value.finite())) continue;
    if (a.hi.value.value != b.lo.value.value) continue;  // domain gap
    if (!a.hi.included && !b.lo.included) continue;      // excluded by both: gap point
    Rat v = a.hi.value.value;
    out.push_back(Breakpoint{v, i, i + 1, a.hi.included, f.pieces[i].expr(v),
                             f.pieces[i + 1].expr(v)});
  }
  return out;
}

std::vector<Rat> jump_points(const PiecewiseFunc& f) {
  std::vector<Rat> out;
  for (const auto& bp : breakpoints(f))
    if (bp.jump()) out.push_back(bp.point);
  return out;
}

PiecewiseFunc continuous_approximation(const PiecewiseFunc& f, int n) {
  if (n < 1) throw std::invalid_argument("continuous_approximation: n must be >= 1");
  std::vector<Breakpoint> jumps;
  for (const auto& bp : breakpoints(f))
    if (bp.jump()) jumps.push_back(bp);
  if (jumps.empty()) return f;

  // Ramps carved per piece: at most one from each end.
  struct Edit {
    std::optional<std::pair<Rat, Poly>> left;   // ramp on (lo, lo+w], poly
    std::optional<std::pair<Rat, Poly>> right;  // ramp on [hi-w, hi), poly
  };
  std::vector<Edit> edits(f.pieces.size());
  Rat step = rat(1, n);
  for (const auto& bp : jumps) {
    size_t host = bp.left_owns ? bp.right_piece : bp.left_piece;
    const Interval& hp = f.pieces[host].piece;
    Rat w = step;
    if (hp.lo.value.finite() && hp.hi.value.finite())
      w = rat_min(w, (hp.hi.value.value - hp.lo.value.value) / 2);
    if (bp.left_owns) {
      // Ramp (b, b+w]: from the owner's value at b up to the host's value.
      Rat slope = (f.pieces[host].expr(bp.point + w) - bp.left_limit) / w;
      Poly ramp = Poly::affine(slope, bp.left_limit - slope * bp.point);
      edits[host].left = {w, ramp};
    } else {
      // Ramp [b-w, b): ends at the owner's value at b.
      Rat slope = (bp.right_limit - f.pieces[host].expr(bp.point - w)) / w;
      Poly ramp = Poly::affine(slope, bp.right_limit - slope * bp.point);
      edits[host].right = {w, ramp};
    }
  }

  std::vector<PiecePoly> out;
  for (size_t i = 0; i < f.pieces.size(); ++i) {
    const Interval& iv = f.pieces[i].piece;
    const Edit& e = edits[i];
    if (!e.left && !e.right) {
      out.push_back(f.pieces[i]);
      continue;
    }
    Endpoint inner_lo = iv.lo;
    Endpoint inner_hi = iv.hi;
    if (e.left) {
      Rat endv = iv.lo.value.value + e.left->first;
      out.push_back({Interval{{iv.lo.value, false}, {ExtRat(endv), true}}, e.left->second});
      inner_lo = Endpoint{ExtRat(endv), false};
    }
    if (e.right) {
      Rat startv = iv.hi.value.value - e.right->first;
      bool meets_left = e.left && startv == inner_lo.value.value;
      // Touching ramps agree at the shared point; the right one opens there.
      out.push_back({Interval{{ExtRat(startv), !meets_left}, {iv.hi.value, false}},
                     e.right->second});
      inner_hi = Endpoint{ExtRat(startv), false};
    }
    Interval remnant{inner_lo, inner_hi};
    if (remnant.valid()) out.push_back({remnant, f.pieces[i].expr});
  }
  return make_pwfunc(f.domain, std::move(out));
}

std::string to_string(const PiecewiseFunc& f) {
  if (f.is_empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < f.pieces.size(); ++i) {
    if (i) out += "; ";
    out += to_string(f.pieces[i].piece) + ": " + to_string(f.pieces[i].expr);
  }
  return out;
}

}  // namespace extlab
