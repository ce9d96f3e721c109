#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pnspan/counterexample.hpp"
#include "pnspan/errors.hpp"
#include "pnspan/graph.hpp"
#include "pnspan/metric.hpp"
#include "pnspan/parallel.hpp"

namespace pnspan {

/// Every pair connected, undirected.
template <MetricSpace S>
MetricGraph<distance_t<S>> build_complete(const S& space) {
  const auto n = static_cast<PointId>(space.size());
  MetricGraph<distance_t<S>> g(n, Directedness::Undirected);
  for (PointId u = 0; u < n; ++u) {
    for (PointId v = u + 1; v < n; ++v) g.add_edge(u, v, space.distance(u, v));
  }
  return g;
}

struct HspRound {
  PointId chosen;
  /// Points dropped from the allowed set this round (excluding `chosen`),
  /// ascending.
  std::vector<PointId> removed;
};

struct HspNeighborTrace {
  PointId source;
  std::vector<HspRound> rounds;
};

template <class T>
struct HspResult {
  MetricGraph<T> graph;
  std::vector<HspNeighborTrace> traces;
};

/// Half Space Proximal neighbors of one source. The allowed set starts as every
/// other point; each round takes its nearest member (smallest id on ties),
/// links to it, and drops every allowed point strictly closer to that
/// neighbor than to the source.
template <MetricSpace S>
HspNeighborTrace hsp_neighbors(const S& space, PointId source) {
  const auto n = static_cast<PointId>(space.size());
  std::vector<PointId> allowed;
  allowed.reserve(n);
  for (PointId v = 0; v < n; ++v) {
    if (v == source) continue;
    if (!(space.distance(source, v) > ScalarTraits<distance_t<S>>::zero())) {
      throw DuplicatePointError(std::min(source, v), std::max(source, v));
    }
    allowed.push_back(v);
  }
  HspNeighborTrace trace{source, {}};
  std::vector<PointId> kept;
  while (!allowed.empty()) {
    PointId best = allowed.front();
    for (PointId v : allowed) {
      if (space.distance(source, v) < space.distance(source, best)) best = v;
    }
    HspRound round{best, {}};
    kept.clear();
    for (PointId v : allowed) {
      if (v == best) continue;
      if (space.distance(best, v) < space.distance(source, v)) {
        round.removed.push_back(v);
      } else {
        kept.push_back(v);
      }
    }
    allowed.swap(kept);
    trace.rounds.push_back(std::move(round));
  }
  return trace;
}

/// Directed HSP graph with the per-source round traces. Sources are processed
/// independently (in parallel when workers are available).
template <MetricSpace S>
HspResult<distance_t<S>> build_hsp(const S& space) {
  const std::size_t n = space.size();
  if (n == 0) throw ParameterError("HSP needs at least one point");
  std::vector<HspNeighborTrace> traces(n);
  parallel_for(n, [&](std::size_t u) { traces[u] = hsp_neighbors(space, static_cast<PointId>(u)); });
  MetricGraph<distance_t<S>> g(n, Directedness::Directed);
  for (const auto& t : traces) {
    for (const auto& r : t.rounds) g.add_edge(t.source, r.chosen, space.distance(t.source, r.chosen));
  }
  return {std::move(g), std::move(traces)};
}

/// Undirected view: {u,v} is present iff u->v or v->u is.
template <class T>
MetricGraph<T> symmetrize(const MetricGraph<T>& g) {
  MetricGraph<T> out(g.size(), Directedness::Undirected);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (const auto& e : g.neighbors(static_cast<PointId>(u))) out.add_edge(static_cast<PointId>(u), e.to, e.weight);
  }
  return out;
}

using Triangle = std::array<PointId, 3>;

/// Delaunay triangles (counter-clockwise) of a planar point set, built by
/// lexicographic incremental insertion with edge flips driven by an exact
/// in-circle predicate. Cocircular ties are broken by a symbolic perturbation
/// ordered by point id. Throws UnsupportedDimensionError for dim != 2 and
/// DegenerateInputError when fewer than 3 points or all points are collinear.
std::vector<Triangle> delaunay_triangles(const EuclideanSpace& space);

/// Undirected Delaunay edge graph.
FloatGraph build_delaunay(const EuclideanSpace& space);

struct CounterexampleGraph {
  ExactGraph graph;
  CounterexampleSpace space;
};

/// G_i: vertices f_0..f_i (ids 0..i) and f_inf (id i+1), edges
/// f_0-f_1-...-f_i plus {f_i, f_inf}. Requires 0 < eps <= 1/(10(i+1)(i+2)).
CounterexampleGraph build_counterexample_graph(std::uint32_t i, const Rational& eps);
inline CounterexampleGraph build_counterexample_graph(std::uint32_t i) {
  return build_counterexample_graph(i, default_epsilon(i));
}

}  // namespace pnspan
