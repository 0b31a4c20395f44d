#include "extlab/classify.hpp"

#include "extlab/retraction.hpp"

namespace extlab {

ContinuityReport is_continuous(const PiecewiseFunc& f) {
  ContinuityReport rep{true, {}};
  for (const auto& bp : breakpoints(f)) {
    if (bp.jump()) {
      rep.continuous = false;
      rep.jumps.push_back(bp.point);
    }
  }
  return rep;
}

PiecewiseContinuityReport is_piecewise_continuous(const PiecewiseFunc& f, int depth) {
  if (f.domain != RealSet::line())
    throw std::invalid_argument("is_piecewise_continuous: domain must be the whole line");
  if (depth < 1) throw std::invalid_argument("is_piecewise_continuous: depth must be >= 1");
  PiecewiseContinuityReport rep;
  rep.piecewise_continuous = true;
  std::vector<Breakpoint> jumps;
  for (const auto& bp : breakpoints(f))
    if (bp.jump()) jumps.push_back(bp);
  for (int n = 1; n <= depth; ++n) {
    RealSet xn = RealSet::line();
    for (const auto& bp : jumps) {
      // Carve the non-owning side, keep the jump point itself.
      Interval carved = bp.left_owns
                            ? Interval::open(bp.point, bp.point + rat(1, n))
                            : Interval::open(bp.point - rat(1, n), bp.point);
      xn = difference(xn, RealSet::of({carved}));
      xn = union_of(xn, RealSet::of({Interval::point(bp.point)}));
    }
    bool ok = is_closed(xn) && restriction_continuous(f, xn);
    rep.witness_ok.push_back(ok);
    rep.cover.push_back(std::move(xn));
    if (!ok) rep.piecewise_continuous = false;
  }
  return rep;
}

namespace {

std::vector<PreimageWitness> preimage_witnesses(const PiecewiseFunc& f,
                                                const std::vector<RealSet>& targets, int depth) {
  std::vector<PreimageWitness> out;
  for (const auto& t : targets) {
    PreimageWitness w;
    w.target = t;
    w.pre = preimage(f, t, pow10_inv(9));
    w.chain_ok = true;
    RealSet prev;
    for (int n = 1; n <= depth; ++n) {
      RealSet fn = fsigma_decomposition(w.pre.set, n);
      if (!is_closed(fn) || !subset_of(prev, fn) || !subset_of(fn, w.pre.set)) w.chain_ok = false;
      prev = fn;
      w.decomposition.push_back(std::move(fn));
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<PreimageWitness> fcb_witness(const PiecewiseFunc& f,
                                         const std::vector<RealSet>& open_sets, int depth) {
  for (const auto& u : open_sets)
    if (!is_open(u)) throw std::invalid_argument("fcb_witness: test set " + to_string(u) + " is not open");
  return preimage_witnesses(f, open_sets, depth);
}

std::vector<PreimageWitness> flb_witness(const PiecewiseFunc& f,
                                         const std::vector<RealSet>& closed_sets, int depth) {
  for (const auto& c : closed_sets)
    if (!is_closed(c)) throw std::invalid_argument("flb_witness: test set " + to_string(c) + " is not closed");
  return preimage_witnesses(f, closed_sets, depth);
}

Rat riemann_eval(const Rat& x) {
  Rat r = x;
  r.canonicalize();
  return Rat(Int(1), r.get_den());
}

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = {
      {
          "riemann",
          "f(x) = 1/q for rational x = p/q in lowest terms, 0 at irrational x",
          "of the first Borel class but not of the first level Borel class",
          "the classical Riemann function ... which is of the first Borel class but not of "
          "the first level Borel class",
          false,
      },
      {
          "rationals-obstruction",
          "a bounded Baire-one function on the rationals of [0,1] with no Baire-one "
          "extension to [0,1]",
          "Baire-one on its domain; admits no Baire-one extension, so the domain cannot be "
          "both F-sigma and G-delta",
          "there is a bounded Baire-one function f: Q cap [0,1] -> R which cannot be "
          "extended to a Baire-one function on [0,1]",
          false,
      },
      {
          "clamp",
          "the retraction of the line onto [0,1]: identity inside, nearest endpoint outside",
          "piecewise continuous, first level Borel class, Baire-one",
          "The algebraic retraction ... belongs to the class PC cap FLB; if X = R then it "
          "is Baire-one",
          true,
      },
  };
  return entries;
}

const GalleryEntry* gallery_lookup(const std::string& name) {
  for (const auto& e : gallery())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace extlab
