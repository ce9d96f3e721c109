#include "pnspan/report.hpp"

namespace pnspan {

json to_json(const PairVerdict& verdict, const std::string& property) {
  json out{{"property", property}, {"holds", verdict.holds}};
  if (verdict.witness) out["witness"] = {verdict.witness->first, verdict.witness->second};
  return out;
}

json to_json(const std::vector<HspNeighborTrace>& traces) {
  json out = json::array();
  for (const auto& t : traces) {
    json rounds = json::array();
    for (const auto& r : t.rounds) rounds.push_back({{"chosen", r.chosen}, {"removed", r.removed}});
    out.push_back({{"source", t.source}, {"rounds", std::move(rounds)}});
  }
  return out;
}

json to_json(const FamilyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"i", c.i},
                      {"passed", c.passed()},
                      {"oracle_matches", c.oracle_matches},
                      {"metric_axioms", c.metric_axioms},
                      {"pn_graph", c.pn_graph},
                      {"hsp_matches", c.hsp_matches},
                      {"harmonic_pair_ratio", c.harmonic_stretch},
                      {"pair_ratio", to_fraction_string(c.pair_ratio)},
                      {"pair_ratio_decimal", c.pair_ratio.get_d()},
                      {"stretch", to_fraction_string(c.stretch)},
                      {"stretch_decimal", c.stretch.get_d()},
                      {"failures", c.failures}});
  }
  return {{"i_max", report.i_max},
          {"eps", to_fraction_string(report.eps)},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

std::string distance_table_csv(const CounterexampleSpace& space) {
  std::string out;
  for (PointId v = 0; v < space.size(); ++v) out += ',' + space.member(v).name();
  out += '\n';
  for (PointId u = 0; u < space.size(); ++u) {
    out += space.member(u).name();
    for (PointId v = 0; v < space.size(); ++v) out += ',' + to_fraction_string(space.distance(u, v));
    out += '\n';
  }
  return out;
}

}  // namespace pnspan
