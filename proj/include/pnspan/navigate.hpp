#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pnspan/errors.hpp"
#include "pnspan/graph.hpp"
#include "pnspan/metric.hpp"
#include "pnspan/parallel.hpp"
#include "pnspan/spanner.hpp"

namespace pnspan {

/// Outcome of a pairwise graph property check. `witness` holds the first
/// failing ordered pair (u, v) in lexicographic order.
struct PairVerdict {
  bool holds = true;
  std::optional<std::pair<PointId, PointId>> witness;
};

namespace detail {

template <class Fails>
PairVerdict first_failing_pair(std::size_t n, Fails fails) {
  std::vector<std::optional<PointId>> first(n);
  parallel_for(n, [&](std::size_t su) {
    const auto u = static_cast<PointId>(su);
    for (PointId v = 0; v < n; ++v) {
      if (v != u && fails(u, v)) {
        first[su] = v;
        return;
      }
    }
  });
  for (std::size_t u = 0; u < n; ++u) {
    if (first[u]) return {false, std::make_pair(static_cast<PointId>(u), *first[u])};
  }
  return {};
}

}  // namespace detail

/// PN condition over every ordered pair u != v: some out-neighbor w of u has
/// d(w,v) < d(u,v).
template <MetricSpace S>
PairVerdict is_pn_graph(const MetricGraph<distance_t<S>>& g, const S& space) {
  if (g.size() != space.size()) throw ParameterError("graph and space sizes differ");
  return detail::first_failing_pair(g.size(), [&](PointId u, PointId v) {
    const auto& duv = space.distance(u, v);
    for (const auto& e : g.neighbors(u)) {
      if (space.distance(e.to, v) < duv) return false;
    }
    return true;
  });
}

/// Lune witness check for a directed HSP: every ordered pair u != v without
/// the arc u->v must have an out-neighbor z of u with d(u,z) < d(u,v) and
/// d(z,v) < d(u,v).
template <MetricSpace S>
PairVerdict check_lune(const MetricGraph<distance_t<S>>& g, const S& space) {
  if (g.size() != space.size()) throw ParameterError("graph and space sizes differ");
  return detail::first_failing_pair(g.size(), [&](PointId u, PointId v) {
    if (g.has_edge(u, v)) return false;
    const auto& duv = space.distance(u, v);
    for (const auto& e : g.neighbors(u)) {
      if (space.distance(u, e.to) < duv && space.distance(e.to, v) < duv) return false;
    }
    return true;
  });
}

enum class RouteStatus { Reached, LocalMinimum };

template <class T>
struct RouteResult {
  std::vector<PointId> path;
  std::vector<T> hop_lengths;
  T total_length{};
  RouteStatus status = RouteStatus::Reached;

  bool reached() const noexcept { return status == RouteStatus::Reached; }
  /// Vertex where the walk stopped (the target when reached).
  PointId stopped_at() const { return path.back(); }
};

/// Greedy proximity path from u toward v: step to the out-neighbor closest to
/// v (smallest id on ties) while that is strictly closer than the current
/// vertex.
template <MetricSpace S>
RouteResult<distance_t<S>> proximity_path(const MetricGraph<distance_t<S>>& g, const S& space, PointId u, PointId v) {
  using T = distance_t<S>;
  if (u >= g.size() || v >= g.size() || g.size() != space.size()) throw std::out_of_range("route endpoint out of range");
  if (u == v) throw std::invalid_argument("proximity path needs distinct endpoints");
  RouteResult<T> route;
  route.total_length = ScalarTraits<T>::zero();
  route.path.push_back(u);
  PointId current = u;
  while (current != v) {
    const Edge<T>* step = nullptr;
    T best = space.distance(current, v);
    for (const auto& e : g.neighbors(current)) {
      T candidate = space.distance(e.to, v);
      if (candidate < best) {
        best = std::move(candidate);
        step = &e;
      }
    }
    if (!step) {
      route.status = RouteStatus::LocalMinimum;
      return route;
    }
    route.hop_lengths.push_back(step->weight);
    route.total_length += step->weight;
    route.path.push_back(step->to);
    current = step->to;
  }
  return route;
}

/// Path length of a reached route between its vertex farthest from the
/// target and its vertex closest to the target, restricted to vertices inside
/// the closed ball B_r(x). Zero when fewer than two vertices fall inside.
/// First occurrences win ties.
template <MetricSpace S>
distance_t<S> length_inside_ball(const RouteResult<distance_t<S>>& route, const S& space, PointId x,
                                 const distance_t<S>& r, PointId v) {
  using T = distance_t<S>;
  if (!route.reached()) throw std::invalid_argument("length inside ball needs a route that reached its target");
  if (route.path.back() != v) throw std::invalid_argument("route does not end at the given target");
  if (r < ScalarTraits<T>::zero()) throw std::invalid_argument("ball radius must be nonnegative");
  std::optional<std::size_t> far, near;
  std::size_t inside = 0;
  for (std::size_t k = 0; k < route.path.size(); ++k) {
    const PointId p = route.path[k];
    if (!(space.distance(x, p) <= r)) continue;
    ++inside;
    if (!far || space.distance(p, v) > space.distance(route.path[*far], v)) far = k;
    if (!near || space.distance(p, v) < space.distance(route.path[*near], v)) near = k;
  }
  T length = ScalarTraits<T>::zero();
  if (inside < 2) return length;
  const auto [lo, hi] = std::minmax(*far, *near);
  for (std::size_t k = lo; k < hi; ++k) length += route.hop_lengths[k];
  return length;
}

/// Maximum over ordered pairs of (greedy route length) / d(u,v). Throws
/// NotNavigableError with the PN witness when the graph is not a PN-graph.
template <MetricSpace S>
StretchReport<distance_t<S>> greedy_stretch(const MetricGraph<distance_t<S>>& g, const S& space,
                                            bool keep_pairs = false) {
  using T = distance_t<S>;
  const auto verdict = is_pn_graph(g, space);
  if (!verdict.holds) throw NotNavigableError(verdict.witness->first, verdict.witness->second);
  const std::size_t n = g.size();
  std::vector<detail::RowBest<T>> rows(n);
  std::vector<std::vector<PairRatio<T>>> per_row(keep_pairs ? n : 0);
  parallel_for(n, [&](std::size_t su) {
    const auto u = static_cast<PointId>(su);
    for (PointId v = 0; v < n; ++v) {
      if (v == u) continue;
      auto route = proximity_path(g, space, u, v);
      T metric = space.distance(u, v);
      T ratio = route.total_length / metric;
      if (!rows[su].ratio || ratio > *rows[su].ratio) rows[su] = {ratio, v};
      if (keep_pairs) per_row[su].push_back({u, v, std::move(metric), route.total_length, std::move(ratio)});
    }
  });
  return detail::fold_rows(rows, n, keep_pairs ? &per_row : nullptr);
}

}  // namespace pnspan
