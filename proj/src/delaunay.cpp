#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "pnspan/construct.hpp"
#include "pnspan/predicates.hpp"

namespace pnspan {
namespace {

using predicates::Point2;

class Triangulator {
 public:
  explicit Triangulator(const EuclideanSpace& space) {
    points_.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      const auto p = space.point(static_cast<PointId>(i));
      points_.push_back({p[0], p[1]});
    }
  }

  std::vector<Triangle> run() {
    std::vector<PointId> order(points_.size());
    std::iota(order.begin(), order.end(), PointId{0});
    std::sort(order.begin(), order.end(), [this](PointId a, PointId b) { return points_[a] < points_[b]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (points_[order[k - 1]] == points_[order[k]]) {
        throw DuplicatePointError(std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k]));
      }
    }
    const std::size_t first_off_line = seed(order);
    for (std::size_t k = first_off_line + 1; k < order.size(); ++k) insert_outside(order[k]);

    std::vector<Triangle> out;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (alive_[t]) out.push_back(tris_[t]);
    }
    return out;
  }

 private:
  static std::uint64_t key(PointId a, PointId b) { return (std::uint64_t{a} << 32) | b; }

  int orient(PointId a, PointId b, PointId c) const {
    return predicates::orient2d(points_[a], points_[b], points_[c]);
  }

  void add(PointId a, PointId b, PointId c) {
    const std::size_t t = tris_.size();
    tris_.push_back({a, b, c});
    alive_.push_back(true);
    edge_owner_[key(a, b)] = t;
    edge_owner_[key(b, c)] = t;
    edge_owner_[key(c, a)] = t;
  }

  void remove(std::size_t t) {
    const auto& [a, b, c] = tris_[t];
    edge_owner_.erase(key(a, b));
    edge_owner_.erase(key(b, c));
    edge_owner_.erase(key(c, a));
    alive_[t] = false;
  }

  // Vertex of triangle t opposite its directed edge a->b.
  PointId apex(std::size_t t, PointId a) const {
    const auto& tri = tris_[t];
    for (int k = 0; k < 3; ++k) {
      if (tri[k] == a) return tri[(k + 2) % 3];
    }
    return a;
  }

  // Fans the leading collinear run to the first point off its line; returns
  // the position of that point in `order`.
  std::size_t seed(const std::vector<PointId>& order) {
    const PointId s0 = order[0];
    const PointId s1 = order[1];
    std::size_t k = 2;
    int side = 0;
    for (; k < order.size(); ++k) {
      side = orient(s0, s1, order[k]);
      if (side != 0) break;
    }
    if (side == 0) throw DegenerateInputError("all points are collinear");
    const PointId apex_point = order[k];
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (side > 0) {
        add(order[j], order[j + 1], apex_point);
      } else {
        add(order[j + 1], order[j], apex_point);
      }
      pending_.push_back({order[j], order[j + 1]});
      pending_.push_back({order[j], apex_point});
    }
    pending_.push_back({order[k - 1], apex_point});
    if (side > 0) {
      hull_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    } else {
      hull_.assign(order.rbegin() + static_cast<std::ptrdiff_t>(order.size() - k), order.rend());
      hull_.push_back(apex_point);
    }
    legalize();
    return k;
  }

  // p is lexicographically larger than every inserted point, hence strictly
  // outside the current hull; it sees a contiguous run of hull edges.
  void insert_outside(PointId p) {
    const std::size_t h = hull_.size();
    std::vector<char> visible(h);
    for (std::size_t e = 0; e < h; ++e) visible[e] = orient(hull_[e], hull_[(e + 1) % h], p) < 0;
    std::size_t start = 0;
    while (!(visible[start] && !visible[(start + h - 1) % h])) ++start;
    std::size_t count = 0;
    while (visible[(start + count) % h]) {
      const PointId a = hull_[(start + count) % h];
      const PointId b = hull_[(start + count + 1) % h];
      add(b, a, p);
      pending_.push_back({a, b});
      ++count;
    }
    std::vector<PointId> next;
    next.reserve(h + 1);
    // Keep hull_[start], drop the `count - 1` vertices strictly inside the
    // visible chain, and splice p in.
    for (std::size_t j = 0; j < h; ++j) {
      const std::size_t offset = (j + h - start) % h;
      if (offset >= 1 && offset < count) continue;
      next.push_back(hull_[j]);
      if (offset == 0) next.push_back(p);
    }
    hull_ = std::move(next);
    legalize();
  }

  void legalize() {
    while (!pending_.empty()) {
      const auto [a, b] = pending_.back();
      pending_.pop_back();
      auto it1 = edge_owner_.find(key(a, b));
      auto it2 = edge_owner_.find(key(b, a));
      if (it1 == edge_owner_.end() || it2 == edge_owner_.end()) continue;
      // Orient so that t1 holds a->b.
      const std::size_t t1 = it1->second;
      const std::size_t t2 = it2->second;
      const PointId c = apex(t1, a);
      const PointId d = apex(t2, b);
      if (predicates::incircle_perturbed(points_[a], a, points_[b], b, points_[c], c, points_[d], d) <= 0) {
        continue;
      }
      remove(t1);
      remove(t2);
      add(a, d, c);
      add(d, b, c);
      pending_.push_back({a, d});
      pending_.push_back({d, b});
      pending_.push_back({b, c});
      pending_.push_back({c, a});
    }
  }

  std::vector<Point2> points_;
  std::vector<Triangle> tris_;
  std::vector<bool> alive_;
  std::unordered_map<std::uint64_t, std::size_t> edge_owner_;
  std::vector<PointId> hull_;
  std::vector<std::pair<PointId, PointId>> pending_;
};

}  // namespace

std::vector<Triangle> delaunay_triangles(const EuclideanSpace& space) {
  if (space.dim() != 2) {
    throw UnsupportedDimensionError("Delaunay triangulation needs dim 2, got " + std::to_string(space.dim()));
  }
  if (space.size() < 3) throw DegenerateInputError("Delaunay triangulation needs at least 3 points");
  return Triangulator(space).run();
}

FloatGraph build_delaunay(const EuclideanSpace& space) {
  const auto triangles = delaunay_triangles(space);
  FloatGraph g(space.size(), Directedness::Undirected);
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k) {
      const PointId u = t[k];
      const PointId v = t[(k + 1) % 3];
      g.add_edge(u, v, space.distance(u, v));
    }
  }
  return g;
}

}  // namespace pnspan
