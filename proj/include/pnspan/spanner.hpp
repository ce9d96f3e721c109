#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "pnspan/errors.hpp"
#include "pnspan/graph.hpp"
#include "pnspan/metric.hpp"
#include "pnspan/parallel.hpp"

namespace pnspan {

template <class T>
struct PairRatio {
  PointId u;
  PointId v;
  T metric;  // d(u,v)
  T path;    // graph or greedy path length
  T ratio;   // path / metric
};

template <class T>
struct StretchReport {
  T stretch{};
  std::pair<PointId, PointId> argmax{0, 0};
  std::size_t pair_count = 0;
  /// Every ordered pair, filled only when requested.
  std::optional<std::vector<PairRatio<T>>> pairs;
};

/// Row-major n x n matrix; std::nullopt marks an unreachable pair.
template <class T>
using DistanceMatrix = std::vector<std::optional<T>>;

/// Single-source shortest-path lengths (Dijkstra; weights are nonnegative).
template <class T>
std::vector<std::optional<T>> shortest_paths_from(const MetricGraph<T>& g, PointId source) {
  std::vector<std::optional<T>> best(g.size());
  using Item = std::pair<T, PointId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  best[source] = T(0);
  queue.emplace(T(0), source);
  std::vector<char> done(g.size(), 0);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const auto& e : g.neighbors(u)) {
      T candidate = d + e.weight;
      auto& slot = best[e.to];
      if (!slot || candidate < *slot) {
        slot = candidate;
        queue.emplace(std::move(candidate), e.to);
      }
    }
  }
  return best;
}

/// All-pairs shortest-path lengths, one Dijkstra per source (sources run in
/// parallel). Exact for rational graphs.
template <class T>
DistanceMatrix<T> shortest_path_lengths(const MetricGraph<T>& g) {
  const std::size_t n = g.size();
  DistanceMatrix<T> out(n * n);
  parallel_for(n, [&](std::size_t u) {
    auto row = shortest_paths_from(g, static_cast<PointId>(u));
    std::move(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(u * n));
  });
  return out;
}

namespace detail {

// Folds per-source maxima in source order so the arg-max is the
// lexicographically first maximizing pair regardless of scheduling.
template <class T>
struct RowBest {
  std::optional<T> ratio;
  PointId v = 0;
};

template <class T>
StretchReport<T> fold_rows(const std::vector<RowBest<T>>& rows, std::size_t n,
                           std::vector<std::vector<PairRatio<T>>>* per_row) {
  StretchReport<T> report;
  report.stretch = T(1);
  report.pair_count = n * (n - (n > 0 ? 1 : 0));
  bool have = false;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (!rows[u].ratio) continue;
    if (!have || *rows[u].ratio > report.stretch) {
      report.stretch = *rows[u].ratio;
      report.argmax = {static_cast<PointId>(u), rows[u].v};
      have = true;
    }
  }
  if (per_row) {
    std::vector<PairRatio<T>> all;
    for (auto& row : *per_row) std::move(row.begin(), row.end(), std::back_inserter(all));
    report.pairs = std::move(all);
  }
  return report;
}

}  // namespace detail

/// Maximum of d_G(u,v) / d(u,v) over ordered pairs u != v. Throws
/// DisconnectedGraphError naming the first unreachable pair.
template <MetricSpace S>
StretchReport<distance_t<S>> stretch(const MetricGraph<distance_t<S>>& g, const S& space, bool keep_pairs = false) {
  using T = distance_t<S>;
  const std::size_t n = g.size();
  if (n != space.size()) throw ParameterError("graph and space sizes differ");
  std::vector<detail::RowBest<T>> rows(n);
  std::vector<std::optional<PointId>> unreachable(n);
  std::vector<std::vector<PairRatio<T>>> per_row(keep_pairs ? n : 0);
  parallel_for(n, [&](std::size_t su) {
    const auto u = static_cast<PointId>(su);
    const auto lengths = shortest_paths_from(g, u);
    for (PointId v = 0; v < n; ++v) {
      if (v == u) continue;
      if (!lengths[v]) {
        unreachable[su] = v;
        return;
      }
      T metric = space.distance(u, v);
      T ratio = *lengths[v] / metric;
      if (!rows[su].ratio || ratio > *rows[su].ratio) rows[su] = {ratio, v};
      if (keep_pairs) per_row[su].push_back({u, v, std::move(metric), *lengths[v], std::move(ratio)});
    }
  });
  for (std::size_t u = 0; u < n; ++u) {
    if (unreachable[u]) throw DisconnectedGraphError(u, *unreachable[u]);
  }
  return detail::fold_rows(rows, n, keep_pairs ? &per_row : nullptr);
}

template <class T>
struct SpannerVerdict {
  bool holds;
  T stretch;
  std::pair<PointId, PointId> worst_pair;
};

/// stretch <= t, with the worst pair either way.
template <MetricSpace S>
SpannerVerdict<distance_t<S>> is_t_spanner(const MetricGraph<distance_t<S>>& g, const S& space,
                                           const distance_t<S>& t) {
  auto report = stretch(g, space);
  const bool holds = report.stretch <= t;
  return {holds, std::move(report.stretch), report.argmax};
}

/// Smallest i with H_{i+1} > t: the first counterexample graph G_i whose pair
/// (f_0, f_inf) already has ratio above t. Exact harmonic accumulation.
std::uint32_t min_counterexample_index(const Rational& t);

}  // namespace pnspan
