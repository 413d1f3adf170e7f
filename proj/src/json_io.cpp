#include "xfam/json_io.hpp"

namespace xfam {

using nlohmann::json;

json to_json(const ElementSet& s) { return json(s.elements()); }

json to_json(const SetFamily& f) {
  json out = json::array();
  for (const auto& member : f.members()) out.push_back(to_json(member));
  return out;
}

json to_json(const Instance& inst) {
  json ranks = json::array();
  for (const auto& r : inst.ranks) {
    json one = json::array();
    for (int v : r.ranks()) one.push_back(v);
    ranks.push_back(one);
  }
  return json{{"n", inst.n}, {"t", inst.t}, {"ranks", ranks}};
}

json to_json(const BoundReport& rep) {
  json candidates = json::array();
  for (const auto& c : rep.candidates)
    candidates.push_back(
        json{{"gamma", c.gamma + 1}, {"k_min", c.k_min}, {"value", c.value}});
  json argmax = json::array();
  if (rep.star_argmax) argmax.push_back(json{{"type", "star"}});
  for (int g : rep.argmax_gammas)
    argmax.push_back(json{{"type", "gamma"}, {"gamma", g + 1}});
  json predicted = json::array();
  for (const auto& p : rep.predicted) {
    json one{{"case", case_name(p.kase)}};
    if (p.gamma >= 0) one["gamma"] = p.gamma + 1;
    predicted.push_back(one);
  }
  json ranks = json::array();
  for (const auto& r : rep.ranks) {
    json one = json::array();
    for (int v : r.ranks()) one.push_back(v);
    ranks.push_back(one);
  }
  return json{{"n", rep.n},
              {"ranks", ranks},
              {"k1", rep.k1},
              {"k2", rep.k2},
              {"valid", rep.valid},
              {"star_total", rep.star_total},
              {"candidates", candidates},
              {"maximum", rep.maximum},
              {"argmax", argmax},
              {"predicted_cases", predicted}};
}

json to_json(const CrossTBound& bound) {
  json frontier = json::array();
  for (const auto& [r, v] : bound.frontier_candidates)
    frontier.push_back(json{{"r", r}, {"value", v}});
  json gammas = json::array();
  for (const auto& [g, v] : bound.gamma_candidates)
    gammas.push_back(json{{"gamma", g + 1}, {"value", v}});
  return json{{"maximum", bound.maximum},
              {"frontier_candidates", frontier},
              {"gamma_candidates", gammas}};
}

json to_json(const OracleResult& res) {
  json profile = json::array();
  for (const auto& family : res.profile) {
    json layers = json::array();
    for (const auto& lc : family)
      layers.push_back(json{{"rank", lc.rank}, {"count", lc.count}});
    profile.push_back(layers);
  }
  json witness = json::array();
  for (const auto& f : res.witness.families) witness.push_back(to_json(f));
  return json{{"maximum", res.maximum},
              {"method", res.method == OracleMethod::LInitial ? "linitial" : "exhaustive"},
              {"profile", profile},
              {"witness", witness},
              {"nodes", res.nodes},
              {"seconds", res.seconds}};
}

json to_json(const SweepReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json profile = json::array();
    for (const auto& family : e.witness_profile) {
      json layers = json::array();
      for (const auto& lc : family)
        layers.push_back(json{{"rank", lc.rank}, {"count", lc.count}});
      profile.push_back(layers);
    }
    entries.push_back(json{{"instance", to_json(e.instance)},
                           {"oracle_max", e.oracle_max},
                           {"bound_max", e.bound_max},
                           {"equal", e.equal},
                           {"witness_profile", profile},
                           {"classified_case", e.classified}});
  }
  json skipped = json::array();
  for (const auto& s : rep.skipped)
    skipped.push_back(json{{"instance", to_json(s.instance)}, {"reason", s.reason}});
  return json{{"instances", entries},
              {"skipped", skipped},
              {"mismatches", rep.mismatches},
              {"unclassified", rep.unclassified}};
}

json to_json(const Classification& cls) {
  json matches = json::array();
  for (const auto& m : cls.matches) {
    json one{{"case", case_name(m.kase)}};
    if (m.gamma >= 0) one["gamma"] = m.gamma + 1;
    one["witness_permutation"] = m.permutation;
    matches.push_back(one);
  }
  return json{{"maximal", cls.maximal},
              {"tuple_total", cls.tuple_total},
              {"bound_maximum", cls.bound_maximum},
              {"matches", matches}};
}

}  // namespace xfam
