#include <sstream>

#include "pnspan/construct.hpp"
#include "pnspan/counterexample.hpp"
#include "pnspan/navigate.hpp"
#include "pnspan/spanner.hpp"

namespace pnspan {
namespace {

std::string pair_name(const CounterexampleSpace& space, PointId u, PointId v) {
  return "(" + space.member(u).name() + ", " + space.member(v).name() + ")";
}

}  // namespace

FamilyReport verify_family(std::uint32_t i_max, const Rational& eps) {
  require_structural_epsilon(i_max, eps);
  if (eps > default_epsilon(i_max)) {
    throw ParameterError("epsilon " + to_fraction_string(eps) + " exceeds the safe bound " +
                         to_fraction_string(default_epsilon(i_max)) + " for i_max=" + std::to_string(i_max));
  }

  // f_k does not depend on the graph index, so the oracle distances are
  // shared by every G_i. Slot i_max+1 holds f_inf.
  const std::size_t m = static_cast<std::size_t>(i_max) + 2;
  std::vector<PiecewiseConstFn> functions;
  functions.reserve(m);
  for (std::uint32_t k = 0; k <= i_max; ++k) functions.push_back(family_function(FamilyIndex::finite(k), i_max, eps));
  functions.push_back(family_function(FamilyIndex::infinity(), i_max, eps));
  std::vector<Rational> oracle(m * m);
  parallel_for(m, [&](std::size_t a) {
    for (std::size_t b = 0; b < m; ++b) oracle[a * m + b] = dx_measure_oracle(functions[a], functions[b]);
  });

  FamilyReport report;
  report.i_max = i_max;
  report.eps = eps;
  for (std::uint32_t i = 0; i <= i_max; ++i) {
    FamilyCheck check;
    check.i = i;
    auto [graph, space] = build_counterexample_graph(i, eps);
    const auto slot = [&](PointId id) { return id == space.infinity_id() ? m - 1 : std::size_t{id}; };

    for (PointId u = 0; u < space.size() && check.oracle_matches; ++u) {
      for (PointId v = 0; v < space.size(); ++v) {
        if (space.distance(u, v) != oracle[slot(u) * m + slot(v)]) {
          check.oracle_matches = false;
          check.failures.push_back("closed form differs from measure oracle at " + pair_name(space, u, v));
          break;
        }
      }
    }

    if (const auto violations = check_metric_axioms(space); !violations.empty()) {
      const auto& w = violations.front();
      check.metric_axioms = false;
      check.failures.push_back(to_string(w.axiom) + " axiom fails at " + space.member(w.x).name() + ", " +
                               space.member(w.y).name() + ", " + space.member(w.z).name());
    }

    if (const auto pn = is_pn_graph(graph, space); !pn.holds) {
      check.pn_graph = false;
      check.failures.push_back("not a PN-graph: stuck at " + pair_name(space, pn.witness->first, pn.witness->second));
    }

    const auto hsp = symmetrize(build_hsp(space).graph);
    if (!(hsp == graph)) {
      check.hsp_matches = false;
      std::ostringstream edges;
      for (const auto& [u, v] : hsp.edges()) edges << ' ' << pair_name(space, u, v);
      check.failures.push_back("symmetrized HSP differs from E_i:" + edges.str());
    }

    const auto lengths = shortest_paths_from(graph, 0);
    check.pair_ratio = *lengths[space.infinity_id()] / space.distance(0, space.infinity_id());
    check.stretch = stretch(graph, space).stretch;
    if (check.pair_ratio != harmonic(i + 1)) {
      check.harmonic_stretch = false;
      check.failures.push_back("d_G(f_0, f_inf) / d(f_0, f_inf) = " + to_fraction_string(check.pair_ratio) +
                               ", expected H_" + std::to_string(i + 1) + " = " +
                               to_fraction_string(harmonic(i + 1)));
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace pnspan
