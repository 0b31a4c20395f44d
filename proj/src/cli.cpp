#include "extlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

#include "extlab/parse.hpp"
#include "extlab/report_json.hpp"

namespace extlab {

namespace {

struct CliError {
  int code;
  std::string message;
};

struct Options {
  std::string format = "text";
  std::string eps_text;
  int samples = 1000;

  Rat eps() const {
    if (!eps_text.empty()) return parse_rational(eps_text);
    if (const char* env = std::getenv("EXTENDLAB_EPS")) return parse_rational(env);
    return pow10_inv(9);
  }
};

void emit(const Options& opt, std::ostream& out, const std::string& command, const Json& payload,
          const std::string& text_form) {
  if (opt.format == "json")
    out << report_envelope(command, payload).dump(2) << "\n";
  else
    out << text_form << "\n";
}

Retraction retraction_from(const std::string& a_text, const std::string& g_text,
                           const std::string& policy, const std::string& anchors) {
  RealSet a = parse_realset(a_text);
  if (!g_text.empty()) return build_retraction(a, parse_pwfunc(g_text));
  if (!anchors.empty()) {
    std::vector<Rat> list;
    size_t start = 0;
    while (start <= anchors.size()) {
      size_t comma = anchors.find(',', start);
      if (comma == std::string::npos) comma = anchors.size();
      list.push_back(parse_rational(anchors.substr(start, comma - start)));
      start = comma + 1;
    }
    return build_retraction(a, default_g(a, AnchorPolicy::explicit_list(std::move(list))));
  }
  if (policy == "midpoint") return build_retraction(a, default_g(a, AnchorPolicy::midpoint()));
  if (a == RealSet::line()) return build_default_retraction(a);
  return build_retraction(a, default_g(a));
}

// ---------------------------------------------------------------------------

int cmd_set(const Options& opt, const std::string& op, const std::string& s_text,
            const std::string& t_text, const std::string& x_text, int n, std::ostream& out) {
  RealSet s = parse_realset(s_text);
  auto need_t = [&] { return parse_realset(t_text); };
  RealSet result;
  if (op == "canonicalize") result = s;
  else if (op == "union") result = union_of(s, need_t());
  else if (op == "intersect") result = intersect(s, need_t());
  else if (op == "complement") result = complement(s);
  else if (op == "difference") result = difference(s, need_t());
  else if (op == "closure") result = closure(s);
  else if (op == "interior") result = interior(s);
  else if (op == "decompose") result = fsigma_decomposition(s, n);
  else if (op == "codecompose") result = gdelta_codecomposition(s, n);
  else if (op == "contains") {
    bool in = s.contains(parse_rational(x_text));
    emit(opt, out, "set contains", Json{{"contains", in}}, in ? "true" : "false");
    return 0;
  } else if (op == "is-closed" || op == "is-open") {
    bool v = op == "is-closed" ? is_closed(s) : is_open(s);
    emit(opt, out, "set " + op, Json{{op == "is-closed" ? "closed" : "open", v}},
         v ? "true" : "false");
    return 0;
  } else {
    throw CliError{2, "unknown set operation '" + op + "'"};
  }
  emit(opt, out, "set " + op, Json(to_string(result)), to_string(result));
  return 0;
}

int cmd_func(const Options& opt, const std::string& op, const std::string& f_text,
             const std::string& x_text, const std::string& over_text,
             const std::string& target_text, int n, std::ostream& out) {
  PiecewiseFunc f = parse_pwfunc(f_text);
  if (op == "eval") {
    Rat v = eval(f, parse_rational(x_text));
    emit(opt, out, "func eval", json_of(v), to_string(v));
  } else if (op == "norm") {
    RealSet over = over_text.empty() ? f.domain : parse_realset(over_text);
    NormResult r = sup_norm(f, over, opt.eps());
    std::string text = r.exact ? to_string(*r.exact)
                               : "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
    text += r.attained ? " (attained)" : " (supremum, not attained)";
    emit(opt, out, "func norm", json_of(r), text);
  } else if (op == "preimage") {
    PreimageResult r = preimage(f, parse_realset(target_text), opt.eps());
    std::string text = to_string(r.set);
    text += r.mode == Exactness::Exact ? "  EXACT" : "  APPROX slack=" + to_string(*r.slack);
    emit(opt, out, "func preimage", json_of(r), text);
  } else if (op == "approx") {
    PiecewiseFunc r = continuous_approximation(f, n);
    emit(opt, out, "func approx", json_of(r), to_string(r));
  } else {
    throw CliError{2, "unknown func operation '" + op + "'"};
  }
  return 0;
}

int cmd_retract(const Options& opt, const std::string& op, const Retraction& r, int n,
                const std::string& f_check_text, std::ostream& out) {
  if (op == "build") {
    emit(opt, out, "retract build", json_of(r),
         "A = " + to_string(r.A) + "\ng = " + to_string(r.g) + "\nphi = " + to_string(r.phi));
    return 0;
  }
  if (op == "decompose") {
    RealSet hn = pc_decomposition(r, n);
    bool cont = restriction_continuous(r.phi, hn);
    emit(opt, out, "retract decompose",
         Json{{"H_n", to_string(hn)}, {"phi_continuous_on_H_n", cont}},
         to_string(hn) + (cont ? "  (phi continuous on it)" : "  (CONTINUITY FAILED)"));
    return cont ? 0 : 1;
  }
  if (op == "approx") {
    PiecewiseFunc pn = retraction_approx(r, n);
    emit(opt, out, "retract approx", json_of(pn), to_string(pn));
    return 0;
  }
  if (op == "check") {
    // Fixed-point samples, per-piece range containment, and the case formula
    // for the preimage of a closed test set.
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= 100; ++i) {
      if (r.A.is_empty()) break;
      const Interval& piece = r.A.pieces()[static_cast<size_t>(i) % r.A.pieces().size()];
      Rat a = piece.is_singleton() ? piece.lo.value.value
                                   : sample_point(RealSet::of({piece}));
      if (eval(r.phi, a) != a) {
        ok = false;
        detail = "phi(" + to_string(a) + ") != " + to_string(a);
        break;
      }
    }
    if (ok && !r.g.is_empty()) {
      RealSet f_test = f_check_text.empty() ? closure(r.A) : parse_realset(f_check_text);
      RealSet pre = flb_preimage(r, closure(f_test));
      detail = "phi^{-1}(F) = " + to_string(pre);
    }
    emit(opt, out, "retract check", Json{{"ok", ok}, {"detail", detail}},
         (ok ? "ok" : "FAILED") + (detail.empty() ? "" : "\n" + detail));
    return ok ? 0 : 1;
  }
  throw CliError{2, "unknown retract operation '" + op + "'"};
}

int cmd_extend(const Options& opt, const std::string& op, const std::string& a_text,
               const std::string& f_text, const std::string& g_text,
               const std::string& policy, const std::string& anchors,
               const std::string& x0_text, const std::string& u_text,
               const std::string& opkind, int n_max, std::ostream& out) {
  RealSet a = parse_realset(a_text);
  PiecewiseFunc f = parse_pwfunc(f_text);
  auto retr = [&] { return retraction_from(a_text, g_text, policy, anchors); };

  if (op == "phi-star") {
    PiecewiseFunc ext = phi_star(f, retr());
    emit(opt, out, "extend phi-star", json_of(ext), to_string(ext));
    return 0;
  }
  if (op == "constant") {
    PiecewiseFunc ext = constant_extend(f, a, parse_rational(x0_text));
    emit(opt, out, "extend constant", json_of(ext), to_string(ext));
    return 0;
  }
  if (op == "verify") {
    ExtensionOperator exop =
        opkind == "constant"
            ? constant_anchor_operator(a, parse_rational(x0_text.empty() ? "0" : x0_text))
            : phi_star_operator(retr());
    std::vector<PiecewiseFunc> corpus{f, constant_func(a, Rat(1)), identity_func(a)};
    OperatorReport rep = verify_operator(exop, corpus, {{Rat(2), Rat(-3)}, {Rat(1, 2), Rat(5)}},
                                         opt.eps());
    std::string text = std::string("operator: ") + rep.kind;
    auto flag = [&](const char* name, const CheckResult& c) {
      text += std::string("\n  ") + name + ": " +
              (c.ok ? (c.applicable ? (c.inconclusive ? "inconclusive" : "ok") : "not applicable")
                    : "FAILED") +
              (c.note.empty() ? "" : " (" + c.note + ")");
    };
    flag("extension", rep.extension);
    flag("linear", rep.linear);
    flag("positive", rep.positive);
    flag("unity", rep.unity);
    flag("isometry", rep.isometry);
    emit(opt, out, "extend verify", json_of(rep), text);
    return rep.all_ok() ? 0 : 1;
  }
  if (op == "chain") {
    PreimageChainTrace t = phi_star_preimage_chain(f, retr(), parse_realset(u_text));
    std::string text = "stabilized at N = " + std::to_string(t.stabilization_index) +
                       "\nlimit  = " + to_string(t.limit_set) +
                       "\ndirect = " + to_string(t.direct_set) +
                       (t.certified ? "\ncertified" : "\nMISMATCH");
    emit(opt, out, "extend chain", json_of(t), text);
    return t.certified ? 0 : 1;
  }
  if (op == "baire") {
    Retraction r = retr();
    std::vector<Rat> samples;
    int count = std::max(8, opt.samples / 5);
    for (int i = 0; i < count; ++i) samples.push_back(Rat(2 * i - count, 7) + rat(1, 3));
    BaireWitnessReport rep = baire_witness(f, r, n_max, samples);
    bool ok = rep.all_stabilized && rep.approximants_continuous && rep.bounds_respected;
    std::string text = std::string("route: ") + (rep.composite_route ? "composite" : "direct") +
                       "\nall samples stabilized: " + (rep.all_stabilized ? "yes" : "NO") +
                       "\napproximants continuous: " +
                       (rep.approximants_continuous ? "yes" : "NO") +
                       "\nindices within 1/dist bound: " + (rep.bounds_respected ? "yes" : "NO");
    emit(opt, out, "extend baire", json_of(rep), text);
    return ok ? 0 : 1;
  }
  throw CliError{2, "unknown extend operation '" + op + "'"};
}

int cmd_classify(const Options& opt, const std::string& op, const std::string& f_text,
                 const std::vector<std::string>& u_texts, const std::vector<std::string>& f_sets,
                 const std::string& name, const std::string& x_text, int depth,
                 std::ostream& out) {
  if (op == "riemann") {
    Rat v = riemann_eval(parse_rational(x_text));
    emit(opt, out, "classify riemann", json_of(v), to_string(v));
    return 0;
  }
  if (op == "demo" || op == "gallery") {
    if (name.empty()) {
      Json all = Json::array();
      std::string text;
      for (const auto& e : gallery()) {
        all.push_back(json_of(e));
        text += e.name + ": " + e.statement + "\n  classification: " + e.classification +
                "\n  citation: " + e.citation + "\n";
      }
      emit(opt, out, "classify gallery", all, text);
      return 0;
    }
    const GalleryEntry* e = gallery_lookup(name);
    if (!e) throw CliError{2, "unknown gallery entry '" + name + "'"};
    emit(opt, out, "classify demo", json_of(*e),
         e->name + ": " + e->statement + "\n  classification: " + e->classification +
             "\n  citation: " + e->citation);
    return 0;
  }
  PiecewiseFunc f = parse_pwfunc(f_text);
  if (op == "continuous") {
    ContinuityReport r = is_continuous(f);
    std::string text = r.continuous ? "continuous" : "discontinuous at";
    for (const auto& j : r.jumps) text += " " + to_string(j);
    emit(opt, out, "classify continuous", json_of(r), text);
    return 0;
  }
  if (op == "pc") {
    PiecewiseContinuityReport r = is_piecewise_continuous(f, depth);
    std::string text =
        r.piecewise_continuous ? "piecewise continuous; closed cover:" : "WITNESS FAILED";
    for (const auto& xn : r.cover) text += "\n  " + to_string(xn);
    emit(opt, out, "classify pc", json_of(r), text);
    return r.piecewise_continuous ? 0 : 1;
  }
  if (op == "fcb" || op == "flb") {
    std::vector<RealSet> targets;
    for (const auto& t : op == "fcb" ? u_texts : f_sets) targets.push_back(parse_realset(t));
    auto ws = op == "fcb" ? fcb_witness(f, targets, depth) : flb_witness(f, targets, depth);
    Json arr = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& w : ws) {
      arr.push_back(json_of(w));
      ok = ok && w.chain_ok;
      text += "preimage of " + to_string(w.target) + " = " + to_string(w.pre.set) +
              (w.chain_ok ? "  (F-sigma chain ok)\n" : "  (CHAIN FAILED)\n");
    }
    emit(opt, out, "classify " + op, arr, text);
    return ok ? 0 : 1;
  }
  throw CliError{2, "unknown classify operation '" + op + "'"};
}

int cmd_sample(const Options& opt, const std::string& f_text, const std::string& over_text,
               int count, std::ostream& out) {
  PiecewiseFunc f = parse_pwfunc(f_text);
  RealSet over = over_text.empty() ? f.domain : parse_realset(over_text);
  if (over.is_empty()) throw CliError{2, "sample: empty region"};
  const Interval& first = over.pieces().front();
  const Interval& last = over.pieces().back();
  if (!first.lo.value.finite() || !last.hi.value.finite())
    throw CliError{2, "sample: unbounded region; pass --over with finite bounds"};
  Rat lo = first.lo.value.value, hi = last.hi.value.value;
  if (count < 1) throw CliError{2, "sample: count must be >= 1"};

  out << "x_rational,x_decimal,value_rational,value_decimal\n";
  for (int i = 0; i < count; ++i) {
    Rat x = count == 1 ? Rat((lo + hi) / 2) : Rat(lo + (hi - lo) * Rat(i, count - 1));
    if (!over.contains(x) || !f.domain.contains(x)) continue;
    Rat v = eval(f, x);
    out << to_string(x) << "," << to_decimal(x) << "," << to_string(v) << "," << to_decimal(v)
        << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact extension-operator laboratory"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--eps", opt.eps_text);
  app.add_option("--samples", opt.samples)->check(CLI::PositiveNumber);

  std::string op, s_text, t_text, x_text, n_text, f_text, over_text, target_text;
  std::string a_text, g_text, policy, anchors, x0_text, u_text, opkind, name;
  std::vector<std::string> u_texts, f_sets;
  int n = 4, n_max = 16, depth = 5, count = 1000;

  CLI::App* set = app.add_subcommand("set", "canonical set algebra and decompositions");
  set->add_option("operation", op)->required();
  set->add_option("--S,--A", s_text);
  set->add_option("--T", t_text);
  set->add_option("--x", x_text);
  set->add_option("--n", n);

  CLI::App* func = app.add_subcommand("func", "piecewise-function operations");
  func->add_option("operation", op)->required();
  func->add_option("--f", f_text)->required();
  func->add_option("--x", x_text);
  func->add_option("--over", over_text);
  func->add_option("--target", target_text);
  func->add_option("--n", n);

  CLI::App* retract = app.add_subcommand("retract", "build and verify retractions");
  retract->add_option("operation", op)->required();
  retract->add_option("--A", a_text)->required();
  retract->add_option("--g", g_text);
  retract->add_option("--policy", policy)->check(CLI::IsMember({"nearest", "midpoint"}));
  retract->add_option("--anchors", anchors);
  retract->add_option("--F", t_text);
  retract->add_option("--n", n);

  CLI::App* extend = app.add_subcommand("extend", "extension operators and their laws");
  extend->add_option("operation", op)->required();
  extend->add_option("--A", a_text)->required();
  extend->add_option("--f", f_text)->required();
  extend->add_option("--g", g_text);
  extend->add_option("--policy", policy)->check(CLI::IsMember({"nearest", "midpoint"}));
  extend->add_option("--anchors", anchors);
  extend->add_option("--x0", x0_text);
  extend->add_option("--U", u_text);
  extend->add_option("--op,--op-kind", opkind)->check(CLI::IsMember({"phi-star", "constant"}));
  extend->add_option("--n-max", n_max);

  CLI::App* classify = app.add_subcommand("classify", "function-class reports and the gallery");
  classify->add_option("operation", op)->required();
  classify->add_option("--f", f_text);
  classify->add_option("--U", u_texts);
  classify->add_option("--F", f_sets);
  classify->add_option("--name,name", name);
  classify->add_option("--x", x_text);
  classify->add_option("--depth", depth);

  CLI::App* sample = app.add_subcommand("sample", "CSV of (x, f(x)) pairs on a uniform grid");
  sample->add_option("--f", f_text)->required();
  sample->add_option("--over", over_text);
  sample->add_option("--count", count);

  // Global options may follow the subcommand.
  for (CLI::App* sub : {set, func, retract, extend, classify, sample}) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (set->parsed()) return cmd_set(opt, op, s_text, t_text, x_text, n, out);
    if (func->parsed()) return cmd_func(opt, op, f_text, x_text, over_text, target_text, n, out);
    if (retract->parsed())
      return cmd_retract(opt, op, retraction_from(a_text, g_text, policy, anchors), n, t_text,
                         out);
    if (extend->parsed())
      return cmd_extend(opt, op, a_text, f_text, g_text, policy, anchors, x0_text, u_text,
                        opkind, n_max, out);
    if (classify->parsed())
      return cmd_classify(opt, op, f_text, u_texts, f_sets, name, x_text, depth, out);
    if (sample->parsed()) return cmd_sample(opt, f_text, over_text, count, out);
    err << "no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ":\n"
        << caret_diagnostic(e) << "\n";
    return 2;
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace extlab
