#pragma once

// Test-only reference implementations. Each one takes a different route from
// the library code it is compared against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pnspan/counterexample.hpp"
#include "pnspan/graph.hpp"
#include "pnspan/metric.hpp"

namespace pnspan::testing {

/// Seeded uniform points in the unit cube.
inline EuclideanSpace random_euclidean(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords(n * dim);
  for (auto& c : coords) c = unit(rng);
  return EuclideanSpace(dim, std::move(coords));
}

/// Seeded distinct random bit strings.
inline HammingSpace random_hamming(std::size_t n, std::size_t bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  std::vector<std::string> rows;
  while (rows.size() < n) {
    std::string s(bits, '0');
    for (auto& c : s) c = (rng() & 1U) ? '1' : '0';
    if (seen.insert(s).second) rows.push_back(s);
  }
  return HammingSpace(rows);
}

/// Floyd-Warshall over the edge weights.
template <class T>
std::vector<std::optional<T>> floyd_warshall(const MetricGraph<T>& g) {
  const std::size_t n = g.size();
  std::vector<std::optional<T>> d(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    d[u * n + u] = T(0);
    for (const auto& e : g.neighbors(static_cast<PointId>(u))) d[u * n + e.to] = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k * n + j]) continue;
        T via = *d[i * n + k] + *d[k * n + j];
        if (!d[i * n + j] || via < *d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  return d;
}

/// Max over ordered pairs of shortest-path / metric distance, by Floyd-Warshall.
template <MetricSpace S>
distance_t<S> brute_force_stretch(const MetricGraph<distance_t<S>>& g, const S& space) {
  const std::size_t n = g.size();
  const auto d = floyd_warshall(g);
  distance_t<S> best(1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      distance_t<S> r = *d[u * n + v] / space.distance(static_cast<PointId>(u), static_cast<PointId>(v));
      if (r > best) best = r;
    }
  }
  return best;
}

/// HSP neighbors as a single sorted sweep: candidates in (distance, id) order
/// are accepted unless an already accepted neighbor is strictly closer to them
/// than the source is.
template <MetricSpace S>
std::vector<PointId> hsp_sweep(const S& space, PointId u) {
  std::vector<PointId> order;
  for (PointId v = 0; v < space.size(); ++v) {
    if (v != u) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](PointId a, PointId b) { return space.distance(u, a) < space.distance(u, b); });
  std::vector<PointId> accepted;
  for (PointId v : order) {
    bool forbidden = false;
    for (PointId w : accepted) {
      if (space.distance(w, v) < space.distance(u, v)) {
        forbidden = true;
        break;
      }
    }
    if (!forbidden) accepted.push_back(v);
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

/// Orientation and in-circle in long double; test inputs are generic or small
/// integers where this is exact.
inline long double orient_ld(const std::array<long double, 2>& a, const std::array<long double, 2>& b,
                             const std::array<long double, 2>& c) {
  return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
}

inline long double incircle_ld(std::array<long double, 2> a, std::array<long double, 2> b,
                               std::array<long double, 2> c, const std::array<long double, 2>& d) {
  if (orient_ld(a, b, c) < 0) std::swap(a, b);
  const long double adx = a[0] - d[0], ady = a[1] - d[1];
  const long double bdx = b[0] - d[0], bdy = b[1] - d[1];
  const long double cdx = c[0] - d[0], cdy = c[1] - d[1];
  return (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
         (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
}

/// Delaunay edges by enumeration: {i,j} is kept when some non-degenerate
/// triangle through i and j has no other point strictly inside its
/// circumcircle. Valid for point sets without four cocircular points.
inline std::set<std::pair<PointId, PointId>> brute_force_delaunay_edges(const EuclideanSpace& space) {
  const auto n = static_cast<PointId>(space.size());
  auto pt = [&](PointId i) {
    const auto p = space.point(i);
    return std::array<long double, 2>{p[0], p[1]};
  };
  std::set<std::pair<PointId, PointId>> edges;
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      for (PointId k = j + 1; k < n; ++k) {
        if (orient_ld(pt(i), pt(j), pt(k)) == 0) continue;
        bool empty = true;
        for (PointId m = 0; m < n && empty; ++m) {
          if (m != i && m != j && m != k && incircle_ld(pt(i), pt(j), pt(k), pt(m)) > 0) empty = false;
        }
        if (empty) {
          edges.emplace(i, j);
          edges.emplace(i, k);
          edges.emplace(j, k);
        }
      }
    }
  }
  return edges;
}

/// f_k(x) straight from the recursive case definition.
inline Rational family_value_direct(std::uint32_t k, const Rational& x, const Rational& eps) {
  if (k == 0) return Rational(0);
  const Rational half(1, 2);
  if (x <= half - k * eps) return Rational(0);
  if (x <= half) return Rational(1);
  Rational tail(k, k + 1);
  tail.canonicalize();
  if (x > tail) return Rational(1, k + 1);
  return family_value_direct(k - 1, x, eps);
}

}  // namespace pnspan::testing
