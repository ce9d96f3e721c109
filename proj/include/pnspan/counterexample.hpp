#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pnspan/metric.hpp"
#include "pnspan/rational.hpp"

namespace pnspan {

/// Subscript of a family member: a finite k or Infinity, totally ordered with
/// Infinity above every finite index.
class FamilyIndex {
 public:
  static constexpr FamilyIndex finite(std::uint32_t k) { return FamilyIndex(k); }
  static constexpr FamilyIndex infinity() { return FamilyIndex(kInfinity); }

  constexpr bool is_infinite() const noexcept { return raw_ == kInfinity; }
  /// Only meaningful for finite indices.
  constexpr std::uint32_t value() const noexcept { return static_cast<std::uint32_t>(raw_); }

  constexpr auto operator<=>(const FamilyIndex&) const = default;

  std::string name() const { return is_infinite() ? "f_inf" : "f_" + std::to_string(raw_); }

 private:
  static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
  constexpr explicit FamilyIndex(std::uint64_t raw) : raw_(raw) {}
  std::uint64_t raw_;
};

/// Step function on [0,1]. Piece j covers (breakpoints[j], breakpoints[j+1]];
/// piece 0 also contains 0.
class PiecewiseConstFn {
 public:
  /// Constant function on [0,1].
  explicit PiecewiseConstFn(Rational value);
  PiecewiseConstFn(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t piece_count() const noexcept { return values_.size(); }

  Rational operator()(const Rational& x) const;

  /// Sets the value on (lo, hi], or on [0, hi] when lo == 0.
  void assign(const Rational& lo, const Rational& hi, const Rational& value);

  bool operator==(const PiecewiseConstFn&) const = default;

 private:
  void canonicalize();

  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

/// Largest epsilon accepted by the graph builder for index i: 1/(10(i+1)(i+2)).
Rational default_epsilon(std::uint32_t i);

/// f_k under step width eps. Finite k must not exceed i_context.
PiecewiseConstFn family_function(FamilyIndex k, std::uint32_t i_context, const Rational& eps);

/// Closed-form distance: 1/(x+2) + (y-x)eps for finite x < y, 1 - x*eps against
/// Infinity, 0 on equal indices.
Rational dx_closed_form(FamilyIndex a, FamilyIndex b, const Rational& eps);

/// Lebesgue measure of {x in [0,1] : f(x) != g(x)}, computed by merging the
/// breakpoint lists.
Rational dx_measure_oracle(const PiecewiseConstFn& f, const PiecewiseConstFn& g);

/// Harmonic number H_k = 1 + 1/2 + ... + 1/k (H_0 = 0).
Rational harmonic(std::uint32_t k);

/// Metric space over {f_0, ..., f_i, f_inf}. Point ids 0..i are the finite
/// members, id i+1 is f_inf.
class CounterexampleSpace {
 public:
  using value_type = Rational;

  /// Requires eps > 0 and 1/2 - i*eps > 0 (every step piece non-empty).
  CounterexampleSpace(std::uint32_t i, Rational eps);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t index() const noexcept { return i_; }
  const Rational& epsilon() const noexcept { return eps_; }
  PointId infinity_id() const noexcept { return static_cast<PointId>(i_ + 1); }
  FamilyIndex member(PointId id) const;

  const Rational& distance(PointId u, PointId v) const { return table_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  std::uint32_t i_;
  Rational eps_;
  std::size_t n_;
  std::vector<Rational> table_;
};

/// Throws ParameterError unless 0 < eps and every f_k, k <= i, has non-empty pieces.
void require_structural_epsilon(std::uint32_t i, const Rational& eps);

struct FamilyCheck {
  std::uint32_t i = 0;
  bool oracle_matches = true;   // closed form == measure oracle on all pairs
  bool metric_axioms = true;    // zero violations, exact
  bool pn_graph = true;         // G_i passes the PN check
  bool hsp_matches = true;      // symmetrized HSP edge set == E_i
  bool harmonic_stretch = true; // d_G(f_0,f_inf) / d(f_0,f_inf) == H_{i+1}
  Rational pair_ratio;          // measured d_G(f_0,f_inf) / d(f_0,f_inf)
  Rational stretch;             // maximum ratio over all ordered pairs
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct FamilyReport {
  std::uint32_t i_max = 0;
  Rational eps;
  std::vector<FamilyCheck> checks;

  bool passed() const;
};

/// Runs the five family claims for every i in 0..i_max at a fixed eps.
/// Throws ParameterError if eps is outside the safe range for i_max.
FamilyReport verify_family(std::uint32_t i_max, const Rational& eps);

}  // namespace pnspan
