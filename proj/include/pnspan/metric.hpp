#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnspan/scalar.hpp"

namespace pnspan {

/// Dense index of a point inside its universe (0..n-1).
using PointId = std::uint32_t;

/// A finite point universe with a distance oracle. `distance` is unchecked;
/// use `dist` for range-checked access.
template <class S>
concept MetricSpace = requires(const S& s, PointId u) {
  typename S::value_type;
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.distance(u, u) } -> std::convertible_to<typename S::value_type>;
};

template <MetricSpace S>
using distance_t = typename S::value_type;

/// L2 distance over points in R^dim.
class EuclideanSpace {
 public:
  using value_type = double;

  /// `coords` is row-major, one row of `dim` values per point.
  EuclideanSpace(std::size_t dim, std::vector<double> coords);
  static EuclideanSpace from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> point(PointId id) const {
    return {coords_.data() + static_cast<std::size_t>(id) * dim_, dim_};
  }
  double distance(PointId u, PointId v) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Bit strings of a fixed length under the bit-disagreement count.
class HammingSpace {
 public:
  using value_type = double;

  /// Each string is made of '0'/'1' characters; all strings share one length.
  explicit HammingSpace(const std::vector<std::string>& rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t bits() const noexcept { return bits_; }
  std::string point_string(PointId id) const;
  double distance(PointId u, PointId v) const;

 private:
  std::size_t bits_ = 0;
  std::size_t words_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Explicit distance matrix. Must be symmetric, zero on the diagonal and
/// positive elsewhere; the triangle inequality is left to check_metric_axioms.
class TableSpace {
 public:
  using value_type = double;

  explicit TableSpace(std::vector<std::vector<double>> matrix);

  std::size_t size() const noexcept { return n_; }
  double distance(PointId u, PointId v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<double> m_;
};

template <MetricSpace S>
distance_t<S> dist(const S& space, PointId u, PointId v) {
  if (u >= space.size() || v >= space.size()) {
    throw std::out_of_range("point id out of range: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") with n=" + std::to_string(space.size()));
  }
  return space.distance(u, v);
}

/// Full n x n distance matrix, row-major.
template <MetricSpace S>
std::vector<distance_t<S>> distance_matrix(const S& space) {
  const std::size_t n = space.size();
  std::vector<distance_t<S>> m(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      m[u * n + v] = space.distance(static_cast<PointId>(u), static_cast<PointId>(v));
    }
  }
  return m;
}

enum class Axiom { Symmetry, ZeroDiagonal, Positivity, Triangle };

std::string to_string(Axiom a);

/// One failed axiom instance. For Triangle, `lhs` = d(x,z) and
/// `rhs` = d(x,y) + d(y,z). For Symmetry, lhs = d(x,y) and rhs = d(y,x).
/// For ZeroDiagonal / Positivity, lhs is the offending distance and rhs is 0.
template <class T>
struct AxiomViolation {
  Axiom axiom;
  PointId x;
  PointId y;
  PointId z;
  T lhs;
  T rhs;
};

/// Exhaustive check of the metric axioms over all points, including all n^3
/// ordered triangle inequalities. Floating spaces use the absolute tolerance
/// from ScalarTraits; rational spaces compare exactly.
template <MetricSpace S>
std::vector<AxiomViolation<distance_t<S>>> check_metric_axioms(const S& space) {
  using T = distance_t<S>;
  using Tr = ScalarTraits<T>;
  const std::size_t n = space.size();
  const auto m = distance_matrix(space);
  std::vector<AxiomViolation<T>> out;
  const T zero = Tr::zero();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const T& dxy = m[x * n + y];
      const auto px = static_cast<PointId>(x);
      const auto py = static_cast<PointId>(y);
      if (x == y) {
        if (!(dxy == zero)) out.push_back({Axiom::ZeroDiagonal, px, py, py, dxy, zero});
        continue;
      }
      if (!Tr::eq_tol(dxy, m[y * n + x])) out.push_back({Axiom::Symmetry, px, py, py, dxy, m[y * n + x]});
      if (!(dxy > zero)) out.push_back({Axiom::Positivity, px, py, py, dxy, zero});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const T& dxy = m[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        const T& dxz = m[x * n + z];
        T rhs = dxy + m[y * n + z];
        if (!Tr::leq_tol(dxz, rhs)) {
          out.push_back({Axiom::Triangle, static_cast<PointId>(x), static_cast<PointId>(y),
                         static_cast<PointId>(z), dxz, std::move(rhs)});
        }
      }
    }
  }
  return out;
}

// Point-set text format: one point per line, '#' starts a comment line, blank
// lines are ignored.

/// Euclidean rows of whitespace-separated decimals. When `dim` is given every
/// row must have exactly that arity; otherwise the first row fixes it.
EuclideanSpace parse_euclidean(std::istream& in, std::optional<std::size_t> dim = std::nullopt);
HammingSpace parse_hamming(std::istream& in);
/// Square matrix, one row per line.
TableSpace parse_table(std::istream& in);

EuclideanSpace load_euclidean(const std::filesystem::path& path,
                              std::optional<std::size_t> dim = std::nullopt);
HammingSpace load_hamming(const std::filesystem::path& path);
TableSpace load_table(const std::filesystem::path& path);

void write_euclidean(std::ostream& out, const EuclideanSpace& space);
void write_hamming(std::ostream& out, const HammingSpace& space);

}  // namespace pnspan
