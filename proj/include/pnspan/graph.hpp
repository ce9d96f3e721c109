#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pnspan/metric.hpp"

namespace pnspan {

enum class Directedness { Directed, Undirected };

template <class T>
struct Edge {
  PointId to;
  T weight;

  bool operator==(const Edge&) const = default;
};

/// Weighted graph over point ids. Adjacency lists are kept sorted by neighbor
/// id and free of duplicates; self-loops are never stored (the implicit
/// zero-weight loop at every vertex is a convention only). Undirected graphs
/// keep both directions in sync.
template <class T>
class MetricGraph {
 public:
  using value_type = T;

  MetricGraph(std::size_t n, Directedness d) : directedness_(d), adj_(n) {}

  std::size_t size() const noexcept { return adj_.size(); }
  bool directed() const noexcept { return directedness_ == Directedness::Directed; }
  Directedness directedness() const noexcept { return directedness_; }

  const std::vector<Edge<T>>& neighbors(PointId u) const { return adj_.at(u); }

  bool has_edge(PointId u, PointId v) const {
    const auto& list = adj_.at(u);
    auto it = std::lower_bound(list.begin(), list.end(), v, [](const Edge<T>& e, PointId id) { return e.to < id; });
    return it != list.end() && it->to == v;
  }

  /// Adds u->v (and v->u when undirected). Re-adding an existing edge is a
  /// no-op. Self-loops are rejected.
  void add_edge(PointId u, PointId v, const T& weight) {
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are implicit and cannot be stored");
    insert(u, v, weight);
    if (!directed()) insert(v, u, weight);
  }

  /// Number of stored edges; undirected edges count once.
  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    return directed() ? total : total / 2;
  }

  /// Edge list: every arc for directed graphs, each {u,v} once with u < v
  /// for undirected graphs. Ordered by (u, v).
  std::vector<std::pair<PointId, PointId>> edges() const {
    std::vector<std::pair<PointId, PointId>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (const auto& e : adj_[u]) {
        if (directed() || u < e.to) out.emplace_back(static_cast<PointId>(u), e.to);
      }
    }
    return out;
  }

  bool operator==(const MetricGraph&) const = default;

 private:
  void insert(PointId u, PointId v, const T& weight) {
    auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v, [](const Edge<T>& e, PointId id) { return e.to < id; });
    if (it != list.end() && it->to == v) return;
    list.insert(it, Edge<T>{v, weight});
  }

  Directedness directedness_;
  std::vector<std::vector<Edge<T>>> adj_;
};

using FloatGraph = MetricGraph<double>;
using ExactGraph = MetricGraph<Rational>;

/// First stored edge whose weight differs from the metric distance of its
/// endpoints (within the axiom tolerance for floating spaces), if any.
template <MetricSpace S>
std::optional<std::pair<PointId, PointId>> find_weight_mismatch(const MetricGraph<distance_t<S>>& g,
                                                                const S& space) {
  if (g.size() != space.size()) return std::make_pair(PointId{0}, PointId{0});
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (const auto& e : g.neighbors(static_cast<PointId>(u))) {
      if (!ScalarTraits<distance_t<S>>::eq_tol(e.weight, space.distance(static_cast<PointId>(u), e.to))) {
        return std::make_pair(static_cast<PointId>(u), e.to);
      }
    }
  }
  return std::nullopt;
}

// Graph file: header "directed <n>" or "undirected <n>", then one edge per
// line "u v weight". Floating weights are printed with 17 significant digits,
// rational weights as "p/q". Lines starting with '#' are comments.

using AnyGraph = std::variant<FloatGraph, ExactGraph>;

template <class T>
void write_graph(std::ostream& out, const MetricGraph<T>& g);
extern template void write_graph(std::ostream&, const FloatGraph&);
extern template void write_graph(std::ostream&, const ExactGraph&);

/// Reads a graph file. The weight column decides the scalar: any "p/q" weight
/// yields an ExactGraph, otherwise a FloatGraph.
AnyGraph read_graph(std::istream& in);
AnyGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const AnyGraph& g);

}  // namespace pnspan
