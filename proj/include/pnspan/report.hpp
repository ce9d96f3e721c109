#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pnspan/construct.hpp"
#include "pnspan/counterexample.hpp"
#include "pnspan/metric.hpp"
#include "pnspan/navigate.hpp"
#include "pnspan/spanner.hpp"

namespace pnspan {

using nlohmann::json;

// Floating values serialize as JSON numbers, rationals as "p/q" strings.
inline json value_json(double v) { return v; }
inline json value_json(const Rational& v) { return to_fraction_string(v); }

template <class T>
json to_json(const RouteResult<T>& route) {
  json hops = json::array();
  for (const auto& h : route.hop_lengths) hops.push_back(value_json(h));
  json out{{"path", route.path},
           {"hop_lengths", std::move(hops)},
           {"total_length", value_json(route.total_length)},
           {"status", route.reached() ? "reached" : "local_minimum"}};
  if (!route.reached()) out["at"] = route.stopped_at();
  return out;
}

template <class T>
json to_json(const StretchReport<T>& report) {
  json out{{"stretch", to_double(report.stretch)},
           {"argmax", {report.argmax.first, report.argmax.second}},
           {"pair_count", report.pair_count}};
  if constexpr (ScalarTraits<T>::exact) out["stretch_exact"] = to_fraction_string(report.stretch);
  return out;
}

json to_json(const PairVerdict& verdict, const std::string& property);

template <class T>
json to_json(const std::vector<AxiomViolation<T>>& violations, std::size_t limit = 100) {
  json list = json::array();
  for (std::size_t k = 0; k < violations.size() && k < limit; ++k) {
    const auto& v = violations[k];
    list.push_back({{"axiom", to_string(v.axiom)},
                    {"points", {v.x, v.y, v.z}},
                    {"lhs", value_json(v.lhs)},
                    {"rhs", value_json(v.rhs)}});
  }
  return {{"property", "metric"},
          {"holds", violations.empty()},
          {"violation_count", violations.size()},
          {"violations", std::move(list)}};
}

json to_json(const std::vector<HspNeighborTrace>& traces);
json to_json(const FamilyReport& report);

/// One row per ordered pair: u,v,metric,path,ratio. Requires report.pairs.
template <class T>
std::string pairs_csv(const StretchReport<T>& report) {
  std::string out = "u,v,metric,path_length,ratio";
  if constexpr (ScalarTraits<T>::exact) out += ",ratio_exact";
  out += '\n';
  for (const auto& p : report.pairs.value()) {
    out += std::to_string(p.u) + ',' + std::to_string(p.v) + ',' + ScalarTraits<double>::to_text(to_double(p.metric)) +
           ',' + ScalarTraits<double>::to_text(to_double(p.path)) + ',' +
           ScalarTraits<double>::to_text(to_double(p.ratio));
    if constexpr (ScalarTraits<T>::exact) out += ',' + to_fraction_string(p.ratio);
    out += '\n';
  }
  return out;
}

/// Distance table of the counterexample space laid out with f_0..f_i, f_inf
/// as both header row and first column; cells are "p/q".
std::string distance_table_csv(const CounterexampleSpace& space);

}  // namespace pnspan
