#include "extlab/extend.hpp"

#include <algorithm>

namespace extlab {

namespace {

const Rat& check_eps(const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  return eps;
}

long ceil_to_long(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace

ExtensionOperator phi_star_operator(Retraction r) {
  RealSet a = r.A;
  return ExtensionOperator{std::move(a), std::move(r)};
}

ExtensionOperator constant_anchor_operator(RealSet a, Rat x0) {
  if (!a.contains(x0))
    throw std::invalid_argument("constant_anchor_operator: x0 = " + to_string(x0) +
                                " is not in A");
  return ExtensionOperator{std::move(a), std::move(x0)};
}

PiecewiseFunc phi_star(const PiecewiseFunc& f, const Retraction& r) {
  if (f.domain != r.A) throw std::invalid_argument("phi_star: domain(f) differs from A");
  return compose(f, r.phi);
}

PiecewiseFunc constant_extend(const PiecewiseFunc& f, const RealSet& a, const Rat& x0) {
  if (f.domain != a) throw std::invalid_argument("constant_extend: domain(f) differs from A");
  if (!a.contains(x0))
    throw std::invalid_argument("constant_extend: x0 = " + to_string(x0) + " is not in A");
  Rat v = eval(f, x0);
  std::vector<PiecePoly> pieces = f.pieces;
  RealSet comp = complement(a);
  for (const auto& c : comp.pieces()) pieces.push_back({c, Poly::constant(v)});
  return make_pwfunc(RealSet::line(), std::move(pieces));
}

PiecewiseFunc apply(const ExtensionOperator& op, const PiecewiseFunc& f) {
  if (op.is_phi_star()) return phi_star(f, std::get<Retraction>(op.rule));
  return constant_extend(f, op.A, std::get<Rat>(op.rule));
}

CasePreimage constant_extend_preimage(const PiecewiseFunc& f, const RealSet& a, const Rat& x0,
                                      const RealSet& open_set) {
  if (!is_open(open_set))
    throw std::invalid_argument("constant_extend_preimage: target set is not open");
  if (!a.contains(x0)) throw std::invalid_argument("constant_extend_preimage: x0 is not in A");
  Rat eps = pow10_inv(9);
  PreimageResult pf = preimage(f, open_set, eps);
  if (pf.mode != Exactness::Exact)
    throw std::domain_error("constant_extend_preimage: preimage of f is not exact");
  CasePreimage out;
  out.anchor_value_in_target = open_set.contains(eval(f, x0));
  out.formula_set =
      out.anchor_value_in_target ? union_of(pf.set, complement(a)) : pf.set;
  out.direct = preimage(constant_extend(f, a, x0), open_set, eps);
  out.agree = out.direct.mode == Exactness::Exact && out.formula_set == out.direct.set;
  return out;
}

PreimageChainTrace phi_star_preimage_chain(const PiecewiseFunc& f, const Retraction& r,
                                           const RealSet& open_set) {
  if (!is_open(open_set))
    throw std::invalid_argument("phi_star_preimage_chain: target set is not open");
  Rat eps = pow10_inv(9);
  PreimageResult pf = preimage(f, open_set, eps);
  if (pf.mode != Exactness::Exact)
    throw std::domain_error("phi_star_preimage_chain: preimage of f is not exact");

  PreimageChainTrace trace;
  trace.U = open_set;
  trace.f_preimage = pf.set;

  PreimageResult direct = preimage(phi_star(f, r), open_set, eps);
  if (direct.mode != Exactness::Exact)
    throw std::domain_error("phi_star_preimage_chain: direct preimage is not exact");
  trace.direct_set = direct.set;

  auto g_preimage = [&](const RealSet& target) {
    if (r.g.is_empty()) return RealSet();
    PreimageResult p = preimage(r.g, target, eps);
    if (p.mode != Exactness::Exact)
      throw std::domain_error("phi_star_preimage_chain: g-preimage is not exact");
    return p.set;
  };

  // The full union of g^{-1}(K_n) locks at g^{-1}(closure of f^{-1}(U)))
  // because anchors on the boundary enter no K_n yet matter for no finite
  // stage; the shape lock below detects when both parts stop moving.
  RealSet g_lock = g_preimage(closure(pf.set));
  size_t target_pieces = pf.set.pieces().size();

  const int cap = 128;
  RealSet partial;
  for (int n = 1; n <= cap; ++n) {
    RealSet k = fsigma_decomposition(pf.set, n);
    RealSet g = k;  // already closed in the line; both forms coincide
    trace.K.push_back(k);
    trace.G.push_back(g);
    trace.step_identity.push_back(intersect(r.A, g) == k);
    RealSet pre = union_of(k, g_preimage(g));
    trace.phi_pre.push_back(pre);
    partial = union_of(partial, pre);
    bool shape_locked =
        k.pieces().size() == target_pieces && g_preimage(g) == g_lock;
    if (shape_locked) {
      trace.stabilization_index = n;
      trace.partial_union = partial;
      trace.limit_set = union_of(pf.set, g_preimage(pf.set));
      trace.certified = trace.limit_set == trace.direct_set;
      return trace;
    }
  }
  throw std::domain_error("phi_star_preimage_chain: chain did not stabilize within 128 steps");
}

namespace {

void record_failure(CheckResult& c, const PiecewiseFunc& lhs, const PiecewiseFunc& rhs,
                    const std::string& note) {
  c.ok = false;
  c.note = note;
  c.witness_point = difference_witness(lhs, rhs);
}

}  // namespace

OperatorReport verify_operator(const ExtensionOperator& op, const std::vector<PiecewiseFunc>& fs,
                               const std::vector<std::pair<Rat, Rat>>& coeffs, const Rat& eps) {
  check_eps(eps);
  if (fs.empty()) throw std::invalid_argument("verify_operator: empty corpus");
  for (const auto& f : fs)
    if (f.domain != op.A)
      throw std::invalid_argument("verify_operator: corpus function domain differs from A");

  OperatorReport rep;
  rep.kind = op.kind_name();
  const RealSet line = RealSet::line();

  // Extension: restriction to A gives back f.
  for (const auto& f : fs) {
    PiecewiseFunc back = restrict_to(apply(op, f), op.A);
    if (!canonical_equal(back, f)) {
      record_failure(rep.extension, back, f, "restriction differs from the original");
      break;
    }
  }

  // Linearity as a canonical identity.
  for (size_t i = 0; i < fs.size() && rep.linear.ok; ++i) {
    const PiecewiseFunc& f = fs[i];
    const PiecewiseFunc& g = fs[(i + 1) % fs.size()];
    const auto& [alpha, beta] = coeffs[i % coeffs.size()];
    PiecewiseFunc lhs = apply(op, add(scale(f, alpha), scale(g, beta)));
    PiecewiseFunc rhs = add(scale(apply(op, f), alpha), scale(apply(op, g), beta));
    if (!canonical_equal(lhs, rhs))
      record_failure(rep.linear, lhs, rhs, "operator is not linear on a coefficient pair");
  }

  // Unity preservation.
  {
    PiecewiseFunc one = constant_func(op.A, Rat(1));
    PiecewiseFunc ext = apply(op, one);
    PiecewiseFunc unity_line = constant_func(line, Rat(1));
    if (!canonical_equal(ext, unity_line))
      record_failure(rep.unity, ext, unity_line, "image of the unit function is not the unit");
  }

  // Positivity for certifiably nonnegative inputs.
  {
    bool any = false;
    for (const auto& f : fs) {
      NormResult inf_a = infimum(f, op.A, eps);
      if (!inf_a.exact || *inf_a.exact < 0) continue;  // not applicable for this f
      any = true;
      NormResult inf_x = infimum(apply(op, f), line, eps);
      bool nonneg = inf_x.exact ? *inf_x.exact >= 0 : inf_x.lo >= 0;
      if (!nonneg) {
        rep.positive.ok = false;
        rep.positive.norm_pair = {{*inf_a.exact, inf_x.exact ? *inf_x.exact : inf_x.lo}};
        rep.positive.note = "extension of a nonnegative function attains negative values";
        break;
      }
    }
    rep.positive.applicable = any;
    if (!any) rep.positive.note = "no nonnegative input in the corpus";
  }

  // Sup-norm isometry.
  for (const auto& f : fs) {
    NormResult na = sup_norm(f, op.A, eps);
    NormResult nx = sup_norm(apply(op, f), line, eps);
    if (na.exact && nx.exact) {
      if (*na.exact != *nx.exact) {
        rep.isometry.ok = false;
        rep.isometry.norm_pair = {{*na.exact, *nx.exact}};
        rep.isometry.note = "norms differ exactly";
        break;
      }
    } else {
      // Enclosure comparison at tolerance 2*eps; overlap is inconclusive,
      // separation beyond the tolerance is failure.
      Rat gap = rat_max(na.lo - nx.hi, nx.lo - na.hi);
      if (gap > 2 * eps) {
        rep.isometry.ok = false;
        rep.isometry.norm_pair = {{(na.lo + na.hi) / 2, (nx.lo + nx.hi) / 2}};
        rep.isometry.note = "norm enclosures are separated";
        break;
      }
      if (gap > 0) {
        rep.isometry.inconclusive = true;
        rep.isometry.note = "norm enclosures overlap only within tolerance";
      }
    }
  }
  return rep;
}

BaireWitnessReport baire_witness(const PiecewiseFunc& f, const Retraction& r, int n_max,
                                 const std::vector<Rat>& sample_points) {
  if (n_max < 1) throw std::invalid_argument("baire_witness: n_max must be >= 1");
  if (f.domain != r.A) throw std::invalid_argument("baire_witness: domain(f) differs from A");

  BaireWitnessReport rep;
  rep.n_max = n_max;
  rep.composite_route = r.A.pieces().size() == 1;
  rep.all_stabilized = true;
  rep.approximants_continuous = true;
  rep.bounds_respected = true;

  PiecewiseFunc target = phi_star(f, r);
  const RealSet line = RealSet::line();

  std::vector<PiecewiseFunc> approximants;
  approximants.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    PiecewiseFunc hn = rep.composite_route
                           ? compose(continuous_approximation(f, n), retraction_approx(r, n))
                           : continuous_approximation(target, n);
    if (!restriction_continuous(hn, line)) rep.approximants_continuous = false;
    approximants.push_back(std::move(hn));
  }

  // 1/dist bound: distance from x to phi's breakpoints and f's jumps, and
  // from phi(x) to f's jumps; exact hits are preserved by construction at
  // every stage and do not constrain the index.
  std::vector<Rat> phi_breaks;
  for (const auto& bp : breakpoints(r.phi)) phi_breaks.push_back(bp.point);
  std::vector<Rat> f_jumps = jump_points(f);
  std::vector<Rat> h_jumps = jump_points(target);

  auto bound_for = [&](const Rat& x) -> long {
    std::vector<Rat> dists;
    auto push_dists = [&dists](const Rat& from, const std::vector<Rat>& points) {
      for (const auto& p : points) {
        Rat d = rat_abs(from - p);
        if (d != 0) dists.push_back(d);
      }
    };
    if (rep.composite_route) {
      push_dists(x, phi_breaks);
      push_dists(x, f_jumps);
      push_dists(eval(r.phi, x), f_jumps);
    } else {
      push_dists(x, h_jumps);
    }
    if (dists.empty()) return 1;
    Rat d = *std::min_element(dists.begin(), dists.end());
    return std::max(1L, ceil_to_long(1 / d));
  };

  for (const auto& x : sample_points) {
    Rat want = eval(target, x);
    int last_bad = 0;
    for (int n = 1; n <= n_max; ++n)
      if (eval(approximants[static_cast<size_t>(n - 1)], x) != want) last_bad = n;
    BaireSample s;
    s.x = x;
    s.stabilized_at = last_bad + 1;
    s.bound = static_cast<int>(bound_for(x));
    if (last_bad >= n_max) rep.all_stabilized = false;
    if (s.stabilized_at > s.bound) rep.bounds_respected = false;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace extlab
