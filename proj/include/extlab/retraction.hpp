#pragma once

#include <optional>
#include <vector>

#include "extlab/pwfunc.hpp"

namespace extlab {

enum class AnchorRule { NearestMemberEndpoint, MidpointFallback, Explicit };

/// Selection of the constant value g takes on each component of the
/// complement of A. Explicit anchors are listed component by component and
/// must each lie in A.
struct AnchorPolicy {
  AnchorRule rule = AnchorRule::NearestMemberEndpoint;
  std::vector<Rat> anchors;  // Explicit only, one per complement component

  static AnchorPolicy nearest() { return {}; }
  static AnchorPolicy midpoint() { return {AnchorRule::MidpointFallback, {}}; }
  static AnchorPolicy explicit_list(std::vector<Rat> a) {
    return {AnchorRule::Explicit, std::move(a)};
  }
};

/// The algebraic retraction of the real line onto A: identity on A, the
/// continuous off-set map g elsewhere. range(phi) lies in A and phi fixes
/// every point of A.
struct Retraction {
  PiecewiseFunc phi;  // on the whole line
  RealSet A;
  PiecewiseFunc g;    // on complement(A)
};

/// Canonical continuous map complement(A) -> A, constant on each complement
/// component. Default anchor: the adjacent endpoint of the nearest A-piece
/// when that endpoint belongs to A (ties toward the smaller value),
/// otherwise the nearest piece's midpoint (the point itself for singletons,
/// one unit inside for unbounded pieces).
PiecewiseFunc default_g(const RealSet& a, const AnchorPolicy& policy = AnchorPolicy::nearest());

/// Glues the identity on A with g, verifying domain(g) = complement(A),
/// range(g) contained in A, and continuity of g on each component.
Retraction build_retraction(const RealSet& a, const PiecewiseFunc& g);

Retraction build_default_retraction(const RealSet& a);

/// H_n = F_n(A) union G_n(A): closed, increasing, exhausts the line, and phi
/// restricted to it is continuous.
RealSet pc_decomposition(const Retraction& r, int n);

/// True when phi restricted to s has matching one-sided limits at every
/// breakpoint interior to a component of s.
bool restriction_continuous(const PiecewiseFunc& phi, const RealSet& s);

/// phi-preimage of a closed set by the case formula (A n F) u g^{-1}(F);
/// asserts canonical agreement with the direct preimage of phi.
RealSet flb_preimage(const Retraction& r, const RealSet& closed_set);

/// phi_n: equals phi on H_n, affine across each gap of H_n, continuous on
/// the whole line, eventually equal to phi at every point.
PiecewiseFunc retraction_approx(const Retraction& r, int n);

}  // namespace extlab
