#pragma once

#include <string>
#include <vector>

#include "extlab/pwfunc.hpp"

namespace extlab {

struct ContinuityReport {
  bool continuous;
  std::vector<Rat> jumps;  // witnesses when not continuous
};

/// Continuity judged per connected component of the domain: at every
/// interior breakpoint the one-sided polynomial limits must agree.
ContinuityReport is_continuous(const PiecewiseFunc& f);

struct PiecewiseContinuityReport {
  bool piecewise_continuous;        // always true for representable inputs
  std::vector<RealSet> cover;       // X_1..X_n: closed, increasing, exhausts the line
  std::vector<bool> witness_ok;     // restriction to X_n passes the continuity check
};

/// Explicit increasing closed cover X_n on which f restricts continuously,
/// built by shrinking the non-owning side away from each jump at rate 1/n
/// and re-adding the jump point itself. Requires domain(f) to be the line.
PiecewiseContinuityReport is_piecewise_continuous(const PiecewiseFunc& f, int depth);

struct PreimageWitness {
  RealSet target;
  PreimageResult pre;
  std::vector<RealSet> decomposition;  // F_n chain of the preimage
  bool chain_ok;                       // closed, increasing, inside the preimage
};

/// First-Borel-class witnesses: preimages of the open test sets with their
/// explicit F-sigma chains.
std::vector<PreimageWitness> fcb_witness(const PiecewiseFunc& f,
                                         const std::vector<RealSet>& open_sets, int depth);

/// First-level witnesses: the same machinery against closed test sets.
std::vector<PreimageWitness> flb_witness(const PiecewiseFunc& f,
                                         const std::vector<RealSet>& closed_sets, int depth);

/// Riemann's function at a rational point: 1/q for x = p/q in lowest terms
/// (so every integer maps to 1).
Rat riemann_eval(const Rat& x);

struct GalleryEntry {
  std::string name;
  std::string statement;       // what the function is
  std::string classification;  // documented class membership
  std::string citation;        // the verbatim characterization it carries
  bool representable;          // expressible as a PiecewiseFunc here
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* gallery_lookup(const std::string& name);

}  // namespace extlab
