#include "extlab/retraction.hpp"

namespace extlab {

namespace {

Rat piece_anchor_point(const Interval& piece) {
  if (piece.is_singleton()) return piece.lo.value.value;
  if (piece.lo.value.finite() && piece.hi.value.finite())
    return (piece.lo.value.value + piece.hi.value.value) / 2;
  if (piece.lo.value.finite()) return piece.lo.value.value + 1;
  return piece.hi.value.value - 1;
}

}  // namespace

PiecewiseFunc default_g(const RealSet& a, const AnchorPolicy& policy) {
  if (a.is_empty()) throw std::invalid_argument("default_g: A is empty");
  RealSet comp = complement(a);
  if (policy.rule == AnchorRule::Explicit && policy.anchors.size() != comp.pieces().size())
    throw std::invalid_argument("default_g: need one explicit anchor per complement component");

  std::vector<PiecePoly> pieces;
  for (size_t ci = 0; ci < comp.pieces().size(); ++ci) {
    const Interval& c = comp.pieces()[ci];
    Rat anchor;
    if (policy.rule == AnchorRule::Explicit) {
      anchor = policy.anchors[ci];
      if (!a.contains(anchor))
        throw std::invalid_argument("default_g: explicit anchor " + to_string(anchor) +
                                    " is not in A");
    } else {
      // Locate the A-pieces flanking this component.
      const Interval* left = nullptr;
      const Interval* right = nullptr;
      for (const auto& ap : a.pieces()) {
        if (cmp(ap.hi.value, c.lo.value) <= 0) left = &ap;
        if (!right && cmp(c.hi.value, ap.lo.value) <= 0) right = &ap;
      }
      std::optional<Rat> cand_left, cand_right;
      if (policy.rule == AnchorRule::NearestMemberEndpoint) {
        if (left && left->hi.included) cand_left = left->hi.value.value;
        if (right && right->lo.included) cand_right = right->lo.value.value;
      }
      if (cand_left && cand_right) {
        anchor = rat_min(*cand_left, *cand_right);  // tie toward the smaller value
      } else if (cand_left) {
        anchor = *cand_left;
      } else if (cand_right) {
        anchor = *cand_right;
      } else {
        anchor = piece_anchor_point(left ? *left : *right);  // midpoint fallback
      }
    }
    pieces.push_back({c, Poly::constant(anchor)});
  }
  return make_pwfunc(comp, std::move(pieces));
}

namespace {

// Exact value range of a polynomial piece, or nullopt when it cannot be
// certified exactly (irrational critical values).
std::optional<RealSet> exact_piece_range(const PiecePoly& pp) {
  const Poly& p = pp.expr;
  const Interval& iv = pp.piece;
  if (p.is_constant() || iv.is_singleton())
    return RealSet::of({Interval::point(p(iv.lo.value.finite() ? iv.lo.value.value : Rat(0)))});
  if (p.degree() == 1) {
    bool increasing = p.leading() > 0;
    if (!iv.lo.value.finite() || !iv.hi.value.finite()) {
      // Affine over an unbounded piece: one side of the range is infinite.
      Endpoint fin{ExtRat(p(iv.lo.value.finite() ? iv.lo.value.value : iv.hi.value.value)),
                   iv.lo.value.finite() ? iv.lo.included : iv.hi.included};
      bool range_up = iv.lo.value.finite() == increasing;
      Interval r = range_up ? Interval{fin, {ExtRat::pos_inf(), false}}
                            : Interval{{ExtRat::neg_inf(), false}, fin};
      return RealSet::of({r});
    }
    Endpoint at_lo{ExtRat(p(iv.lo.value.value)), iv.lo.included};
    Endpoint at_hi{ExtRat(p(iv.hi.value.value)), iv.hi.included};
    Interval r = increasing ? Interval{at_lo, at_hi} : Interval{at_hi, at_lo};
    return RealSet::of({r});
  }
  if (!iv.lo.value.finite() || !iv.hi.value.finite()) return std::nullopt;
  // Higher degree: exact only when every interior critical point is rational.
  Poly dp = derivative(p);
  Interval inside{{iv.lo.value, false}, {iv.hi.value, false}};
  std::vector<Rat> crit;
  if (inside.valid()) {
    for (const auto& r : locate_roots(dp, inside, pow10_inv(9))) {
      if (!r.exact) return std::nullopt;
      crit.push_back(r.value);
    }
  }
  // Value range = [min, max] over endpoints and critical values; endpoint
  // attainment decides the bound flags.
  struct Val {
    Rat v;
    bool attained;
  };
  std::vector<Val> vals{{p(iv.lo.value.value), iv.lo.included},
                        {p(iv.hi.value.value), iv.hi.included}};
  for (const auto& c : crit) vals.push_back({p(c), true});
  Val mn = vals[0], mx = vals[0];
  for (const auto& v : vals) {
    if (v.v < mn.v) mn = v;
    else if (v.v == mn.v) mn.attained = mn.attained || v.attained;
    if (v.v > mx.v) mx = v;
    else if (v.v == mx.v) mx.attained = mx.attained || v.attained;
  }
  if (mn.v == mx.v) return RealSet::of({Interval::point(mn.v)});
  return RealSet::of({Interval{{ExtRat(mn.v), mn.attained}, {ExtRat(mx.v), mx.attained}}});
}

}  // namespace

Retraction build_retraction(const RealSet& a, const PiecewiseFunc& g) {
  if (a.is_empty()) throw std::invalid_argument("build_retraction: A is empty");
  RealSet comp = complement(a);
  if (g.domain != comp)
    throw std::invalid_argument("build_retraction: domain(g) is not complement(A)");
  for (const auto& pp : g.pieces) {
    auto range = exact_piece_range(pp);
    if (!range)
      throw std::domain_error("build_retraction: cannot certify range of piece " +
                              to_string(pp.piece));
    RealSet outside = difference(*range, a);
    if (!outside.is_empty()) {
      // A witness point x with g(x) outside A.
      RealSet bad = intersect(preimage(g, outside, pow10_inv(9)).set, RealSet::of({pp.piece}));
      Rat w = bad.is_empty() ? sample_point(RealSet::of({pp.piece})) : sample_point(bad);
      throw std::domain_error("build_retraction: range violation, g(" + to_string(w) + ") = " +
                              to_string(pp.expr(w)) + " is not in A");
    }
  }
  if (!restriction_continuous(g, comp))
    throw std::domain_error("build_retraction: g is discontinuous within a complement component");

  std::vector<PiecePoly> phi_pieces;
  for (const auto& iv : a.pieces()) phi_pieces.push_back({iv, Poly::x()});
  for (const auto& pp : g.pieces) phi_pieces.push_back(pp);
  PiecewiseFunc phi = make_pwfunc(RealSet::line(), std::move(phi_pieces));
  return Retraction{std::move(phi), a, g};
}

Retraction build_default_retraction(const RealSet& a) {
  if (a == RealSet::line()) {
    PiecewiseFunc empty_g;  // complement is empty
    return Retraction{identity_func(RealSet::line()), a, empty_g};
  }
  return build_retraction(a, default_g(a));
}

RealSet pc_decomposition(const Retraction& r, int n) {
  return union_of(fsigma_decomposition(r.A, n), gdelta_codecomposition(r.A, n));
}

bool restriction_continuous(const PiecewiseFunc& phi, const RealSet& s) {
  if (s.is_empty()) return true;
  PiecewiseFunc h = restrict_to(phi, s);
  for (const auto& bp : breakpoints(h))
    if (bp.jump()) return false;
  return true;
}

RealSet flb_preimage(const Retraction& r, const RealSet& closed_set) {
  if (!is_closed(closed_set)) throw std::invalid_argument("flb_preimage: set is not closed");
  RealSet via_a = intersect(r.A, closed_set);
  RealSet via_g;
  if (!r.g.is_empty()) {
    PreimageResult pg = preimage(r.g, closed_set, pow10_inv(9));
    if (pg.mode != Exactness::Exact)
      throw std::domain_error("flb_preimage: g-preimage is not exactly representable");
    via_g = pg.set;
  }
  RealSet formula = union_of(via_a, via_g);
  PreimageResult direct = preimage(r.phi, closed_set, pow10_inv(9));
  if (direct.mode != Exactness::Exact || !(formula == direct.set))
    throw std::logic_error("flb_preimage: case formula disagrees with the direct preimage");
  return formula;
}

PiecewiseFunc retraction_approx(const Retraction& r, int n) {
  if (n < 1) throw std::invalid_argument("retraction_approx: n must be >= 1");
  RealSet hn = pc_decomposition(r, n);
  if (hn == RealSet::line()) return r.phi;
  PiecewiseFunc on_hn = restrict_to(r.phi, hn);
  std::vector<PiecePoly> pieces = on_hn.pieces;
  // Gaps of H_n are bounded open intervals; fill each with the affine
  // interpolant of phi's boundary values.
  RealSet gaps = complement(hn);
  for (const auto& gap : gaps.pieces()) {
    if (!gap.lo.value.finite() || !gap.hi.value.finite())
      throw std::logic_error("retraction_approx: unbounded gap in H_n");
    const Rat& u = gap.lo.value.value;
    const Rat& v = gap.hi.value.value;
    Rat fu = eval(r.phi, u), fv = eval(r.phi, v);
    Rat slope = (fv - fu) / (v - u);
    pieces.push_back({gap, Poly::affine(slope, fu - slope * u)});
  }
  return make_pwfunc(RealSet::line(), std::move(pieces));
}

}  // namespace extlab
