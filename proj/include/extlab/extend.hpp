#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extlab/retraction.hpp"

namespace extlab {

/// One of the two extension operators on functions over A: composition with
/// a retraction, or the constant-anchor extension pinned at x0 in A.
struct ExtensionOperator {
  RealSet A;
  std::variant<Retraction, Rat> rule;  // Retraction | anchor x0

  bool is_phi_star() const { return std::holds_alternative<Retraction>(rule); }
  const char* kind_name() const { return is_phi_star() ? "phi-star" : "constant-anchor"; }
};

ExtensionOperator phi_star_operator(Retraction r);
ExtensionOperator constant_anchor_operator(RealSet a, Rat x0);

/// phi*(f) = f after phi, defined on the whole line; restricts back to f.
PiecewiseFunc phi_star(const PiecewiseFunc& f, const Retraction& r);

/// f on A, the constant f(x0) elsewhere.
PiecewiseFunc constant_extend(const PiecewiseFunc& f, const RealSet& a, const Rat& x0);

PiecewiseFunc apply(const ExtensionOperator& op, const PiecewiseFunc& f);

/// The case-split preimage of the constant-anchor extension of f: f^{-1}(U)
/// when f(x0) is outside U, otherwise joined with the complement of A.
struct CasePreimage {
  bool anchor_value_in_target;
  RealSet formula_set;        // from the case formula
  PreimageResult direct;      // preimage of the extension itself
  bool agree;                 // canonical equality of the two routes
};

CasePreimage constant_extend_preimage(const PiecewiseFunc& f, const RealSet& a, const Rat& x0,
                                      const RealSet& open_set);

/// Bookkeeping of the preimage chain for phi*(f): K_n closed exhaustion of
/// f^{-1}(U), lifts G_n with K_n = A n G_n, per-step phi-preimages, and the
/// chain's limit certified against the direct composition preimage.
struct PreimageChainTrace {
  RealSet U;
  RealSet f_preimage;               // f^{-1}(U), exact
  std::vector<RealSet> K;           // K_1..K_N (closed, increasing)
  std::vector<RealSet> G;           // G_n = K_n (already closed in the line)
  std::vector<RealSet> phi_pre;     // phi^{-1}(G_n)
  std::vector<bool> step_identity;  // K_n == A n G_n, canonically
  int stabilization_index;          // first n with locked shape
  RealSet partial_union;            // union of phi^{-1}(G_n), n <= N
  RealSet limit_set;                // closed form of the full union
  RealSet direct_set;               // preimage of phi*(f)
  bool certified;                   // limit_set == direct_set
};

PreimageChainTrace phi_star_preimage_chain(const PiecewiseFunc& f, const Retraction& r,
                                           const RealSet& open_set);

/// Outcome of one verified operator law, with a witness when it fails.
struct CheckResult {
  bool ok = true;
  bool applicable = true;              // positivity only: no nonnegative input
  bool inconclusive = false;           // isometry only: overlapping enclosures
  std::optional<Rat> witness_point;
  std::optional<std::pair<Rat, Rat>> norm_pair;
  std::string note;
};

struct OperatorReport {
  std::string kind;
  CheckResult extension, linear, positive, unity, isometry;
  bool all_ok() const {
    return extension.ok && linear.ok && positive.ok && unity.ok && isometry.ok;
  }
};

/// Runs the operator laws over a corpus: restriction-equality, linearity on
/// the given coefficient pairs, unity, positivity for nonnegative inputs,
/// and sup-norm isometry.
OperatorReport verify_operator(const ExtensionOperator& op, const std::vector<PiecewiseFunc>& fs,
                               const std::vector<std::pair<Rat, Rat>>& coeffs, const Rat& eps);

/// Pointwise-stabilization evidence that phi*(f) is a pointwise limit of
/// continuous functions.
struct BaireSample {
  Rat x;
  int stabilized_at;  // first index from which values equal f(phi(x))
  int bound;          // ceil(1/dist) bound the index must obey (0 = none)
};

struct BaireWitnessReport {
  bool composite_route;  // f_n after phi_n (single-interval A); else direct
  bool all_stabilized;
  bool approximants_continuous;
  bool bounds_respected;
  int n_max;
  std::vector<BaireSample> samples;
};

BaireWitnessReport baire_witness(const PiecewiseFunc& f, const Retraction& r, int n_max,
                                 const std::vector<Rat>& sample_points);

}  // namespace extlab
