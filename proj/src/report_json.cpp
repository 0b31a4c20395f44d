#include "extlab/report_json.hpp"

namespace extlab {

Json json_of(const Rat& r) {
  return Json{{"rational", to_string(r)}, {"decimal", to_decimal(r)}};
}

Json json_of(const RealSet& s) { return to_string(s); }

Json json_of(const PiecewiseFunc& f) { return to_string(f); }

Json json_of(const NormResult& n) {
  Json j{{"attained", n.attained},
         {"enclosure", {to_string(n.lo), to_string(n.hi)}}};
  if (n.exact) j["exact"] = to_string(*n.exact);
  return j;
}

Json json_of(const PreimageResult& p) {
  Json j{{"set", to_string(p.set)},
         {"mode", p.mode == Exactness::Exact ? "EXACT" : "APPROX"}};
  if (p.slack) j["slack"] = to_string(*p.slack);
  return j;
}

Json json_of(const Retraction& r) {
  return Json{{"A", to_string(r.A)}, {"g", to_string(r.g)}, {"phi", to_string(r.phi)}};
}

Json json_of(const CheckResult& c) {
  Json j{{"ok", c.ok}};
  if (!c.applicable) j["applicable"] = false;
  if (c.inconclusive) j["inconclusive"] = true;
  if (c.witness_point) j["witness"] = to_string(*c.witness_point);
  if (c.norm_pair)
    j["norms"] = {to_string(c.norm_pair->first), to_string(c.norm_pair->second)};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json json_of(const OperatorReport& r) {
  return Json{{"operator", r.kind},     {"all_ok", r.all_ok()},
              {"extension", json_of(r.extension)}, {"linear", json_of(r.linear)},
              {"positive", json_of(r.positive)},   {"unity", json_of(r.unity)},
              {"isometry", json_of(r.isometry)}};
}

Json json_of(const CasePreimage& c) {
  return Json{{"case", c.anchor_value_in_target ? "f(x0) in U" : "f(x0) not in U"},
              {"formula_set", to_string(c.formula_set)},
              {"direct", json_of(c.direct)},
              {"agree", c.agree}};
}

Json json_of(const PreimageChainTrace& t) {
  Json steps = Json::array();
  for (size_t i = 0; i < t.K.size(); ++i) {
    steps.push_back(Json{{"n", i + 1},
                         {"K", to_string(t.K[i])},
                         {"G", to_string(t.G[i])},
                         {"phi_preimage", to_string(t.phi_pre[i])},
                         {"K_equals_A_intersect_G", static_cast<bool>(t.step_identity[i])}});
  }
  return Json{{"U", to_string(t.U)},
              {"f_preimage", to_string(t.f_preimage)},
              {"steps", steps},
              {"stabilization_index", t.stabilization_index},
              {"partial_union", to_string(t.partial_union)},
              {"limit_set", to_string(t.limit_set)},
              {"direct_set", to_string(t.direct_set)},
              {"certified", t.certified}};
}

Json json_of(const BaireWitnessReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"x", to_string(s.x)},
                           {"stabilized_at", s.stabilized_at},
                           {"bound", s.bound}});
  return Json{{"route", r.composite_route ? "composite" : "direct"},
              {"n_max", r.n_max},
              {"all_stabilized", r.all_stabilized},
              {"approximants_continuous", r.approximants_continuous},
              {"bounds_respected", r.bounds_respected},
              {"samples", samples}};
}

Json json_of(const ContinuityReport& r) {
  Json jumps = Json::array();
  for (const auto& j : r.jumps) jumps.push_back(to_string(j));
  return Json{{"continuous", r.continuous}, {"jumps", jumps}};
}

Json json_of(const PiecewiseContinuityReport& r) {
  Json cover = Json::array();
  for (size_t i = 0; i < r.cover.size(); ++i)
    cover.push_back(Json{{"n", i + 1},
                         {"X_n", to_string(r.cover[i])},
                         {"witness_ok", static_cast<bool>(r.witness_ok[i])}});
  return Json{{"piecewise_continuous", r.piecewise_continuous}, {"cover", cover}};
}

Json json_of(const PreimageWitness& w) {
  Json chain = Json::array();
  for (size_t i = 0; i < w.decomposition.size(); ++i)
    chain.push_back(Json{{"n", i + 1}, {"F_n", to_string(w.decomposition[i])}});
  return Json{{"target", to_string(w.target)},
              {"preimage", json_of(w.pre)},
              {"fsigma_chain", chain},
              {"chain_ok", w.chain_ok}};
}

Json json_of(const GalleryEntry& e) {
  return Json{{"name", e.name},
              {"statement", e.statement},
              {"classification", e.classification},
              {"citation", e.citation},
              {"representable", e.representable}};
}

Json report_envelope(const std::string& command, Json payload) {
  return Json{{"schema", "extendlab/1"}, {"command", command}, {"result", std::move(payload)}};
}

}  // namespace extlab
